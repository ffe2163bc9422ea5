#pragma once

#include <vector>

#include "gz/common.hpp"

namespace gz {

/// Periodic C2 cubic spline on the uniform angle grid theta_j = 2*pi*j/N.
/// Used to evaluate gridded support functions (and perturbations) off-grid.
class PeriodicSpline {
public:
    PeriodicSpline() = default;
    explicit PeriodicSpline(std::vector<double> values);

    double operator()(double theta) const;
    double deriv1(double theta) const;
    double deriv2(double theta) const;

    int size() const { return static_cast<int>(y_.size()); }
    const std::vector<double>& values() const { return y_; }
    /// Node second derivatives M_j (solution of the cyclic spline system).
    const std::vector<double>& node_d2() const { return m_; }

private:
    void locate(double theta, int& j, double& t) const;

    std::vector<double> y_;
    std::vector<double> m_;
    double h_ = 0.0;
};

}  // namespace gz
