#pragma once

// Single-point curvature reports and theta sweeps of S(theta).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liecurve/hypersurface.hpp"

namespace liecurve {

struct HypersurfaceReport {
  int n;
  double theta;
  SpectrumReport principal_curvatures;
  double mean_curvature;
  ExtrinsicFlags flags;
  SpectrumReport principal_ricci;
  double scalar;
  ExtremaReport sectional;
};

/// Without a cluster tolerance the spectra follow the exact-theta case split
/// of the closed forms; with one they are the clustered numerical spectra.
HypersurfaceReport make_report(int n, double theta, const SearchConfig& cfg,
                               std::optional<double> cluster_tol = std::nullopt);

nlohmann::json report_to_json(const HypersurfaceReport& report);
std::string report_to_text(const HypersurfaceReport& report);

struct SweepRow {
  double theta;
  double lambda1, lambda2, lambda3;
  double mean;
  double alpha1, alpha2, alpha3;
  double scalar;
  double k_max, k_min;
  double c_cmp, d_cmp;
};

/// `samples` uniform theta values in [0, pi/2], both endpoints exact.
std::vector<double> theta_grid(int samples);

/// Closed forms throughout, except k_min for n > 2, which is searched.
SweepRow sweep_row(int n, double theta, const SearchConfig& cfg);
std::vector<SweepRow> sweep(int n, int samples, const SearchConfig& cfg);

/// 17 significant digits, so values round-trip exactly.
std::string format_double(double value);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace liecurve
