#pragma once

// Algebra definition documents:
//   {"dim": m, "labels": [...],
//    "brackets": [{"i": 0, "j": 1, "coeffs": {"2": 1.0}}, ...]}
// Only pairs with i < j are listed; [e_j, e_i] is filled in by antisymmetry.

#include <json.hpp>

#include "liecurve/metric_lie_algebra.hpp"

namespace liecurve {

/// Throws ParseError on malformed documents.
MetricLieAlgebra algebra_from_json(const nlohmann::json& doc);

/// Emits every nonzero bracket with i < j.
nlohmann::json algebra_to_json(const MetricLieAlgebra& alg);

}  // namespace liecurve
