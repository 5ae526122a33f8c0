#pragma once

// Cross-checks of every closed form against the structure-constant oracle
// and the plane search, as run by `liecurve verify`.

#include <optional>
#include <string>
#include <vector>

#include "liecurve/plane_search.hpp"

namespace liecurve {

struct VerifyOptions {
  std::vector<int> n_list{2, 3, 4};
  int theta_samples = 5;
  /// Threshold for oracle-vs-closed-form deviations.
  double tol = 1e-9;
  /// Threshold for search-vs-closed-form extrema.
  double search_tol = 1e-6;
  /// Random vectors or planes drawn per check.
  int random_samples = 200;
  SearchConfig search;
};

struct CheckResult {
  std::string check;
  int n;
  std::optional<double> theta;
  double deviation;
  double threshold;
  bool passed;
};

/// Throws std::invalid_argument for n < 2 in n_list or fewer than 2 theta samples.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace liecurve
