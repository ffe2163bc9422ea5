#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gz/bodies.hpp"
#include "gz/measures.hpp"
#include "gz/rng.hpp"

namespace gz {

enum class Method { Auto, MonteCarlo, Radial, ClosedForm };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Kernels run OpenMP-parallel by default; the serial path is the reference
/// implementation kept for testing. Both reduce fixed 4096-sample chunks in
/// index order, so results are bit-identical across policies and thread
/// counts.
enum class ExecPolicy { Parallel, Serial };

/// A numeric value with its uncertainty. stderr is the Monte Carlo standard
/// error for mc estimates and 0 for deterministic methods.
struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::int64_t budget = 0;
    Method method = Method::ClosedForm;

    bool deterministic() const { return stderr_ == 0.0; }
};

struct IntegrateOptions {
    Method method = Method::Auto;
    std::int64_t budget = 2'000'000;
    RngSpec rng{};
    ExecPolicy exec = ExecPolicy::Parallel;
    /// Absolute tolerance for deterministic quadrature paths.
    double quad_tol = 1e-11;
};

/// mu(K). Method resolution for Auto: closed form when known, else radial
/// quadrature when n <= 2 and the origin lies in K, else Monte Carlo with
/// the standard Gaussian as the importance reference.
Estimate mu_of_body(const Potential& p, const ConvexBody& k, const IntegrateOptions& opts);

/// Integral of f over K against mu (same machinery as mu_of_body; the
/// closed-form path does not apply).
Estimate moment(const Potential& p, const ConvexBody& k,
                const std::function<double(const Vec&)>& f, const IntegrateOptions& opts);

/// Closed-form mu(K) where one is on file: (gaussian, ball) in n <= 2,
/// (gaussian, box) in any n, (diag_quadratic, box). Otherwise nullopt;
/// unavailability is a normal outcome, not an error.
std::optional<Estimate> closed_form_mu(const Potential& p, const ConvexBody& k);

/// Ball of radius max(12, 6*sqrt(n)) standing in for R^n; the Gaussian mass
/// outside it is < 1e-12 in the dimensions used here.
ConvexBody proxy_ball(int n);

}  // namespace gz
