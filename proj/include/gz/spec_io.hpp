#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gz/bodies.hpp"
#include "gz/inequalities.hpp"
#include "gz/localform.hpp"
#include "gz/measures.hpp"
#include "gz/search.hpp"

namespace gz {

using ordered_json = nlohmann::ordered_json;

/// Body spec files: {"dim": n, "type": "...", fields..., "symmetric": bool}.
/// Normals need not be unit; the loader normalizes and rescales offsets.
ConvexBody body_from_json(const ordered_json& j);
ConvexBody load_body_file(const std::string& path);

/// Inline shorthand (ball:r, box:a,b, ellipse:a,b, square,
/// smoothed-square:eps) or a path to a JSON spec file.
ConvexBody parse_body_spec(const std::string& spec, int dim);

/// Measure spec: {"kind": "gaussian"|"diag_quadratic", "dim": n, "c": [...]}.
Potential measure_from_json(const ordered_json& j);
Potential load_measure_file(const std::string& path);

/// "gaussian", "diag:1,4", or a path to a JSON spec file.
Potential parse_measure_spec(const std::string& spec, int dim);

/// Perturbations: "const[:a]", "cos:m[:a]", "sin:m[:a]" or a JSON file
/// {"values": [...]} of length M.
std::vector<double> parse_psi_spec(const std::string& spec, int M);

ordered_json to_json(const Estimate& e);
ordered_json to_json(const GapReport& r);
ordered_json to_json(const ProfileReport& r);
ordered_json to_json(const CheckReport& r);
ordered_json to_json(const JensenReport& r);
ordered_json to_json(const DilateConcavityReport& r);
ordered_json to_json(const VariationReport& r);
ordered_json to_json(const LocalCReport& r);
ordered_json to_json(const SearchResult& r);

/// Fixed-format double for CSV output (round-trip precision).
std::string format_double(double v);

}  // namespace gz
