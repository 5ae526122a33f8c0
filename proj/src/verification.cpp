#include "liecurve/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liecurve/hypersurface.hpp"
#include "liecurve/report.hpp"

namespace liecurve {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  void record(std::string check, int n, std::optional<double> theta, double deviation, double threshold) {
    out_.push_back({std::move(check), n, theta, deviation, threshold, deviation <= threshold});
  }

  /// Boolean checks are recorded with deviation 0 (holds) or 1 (fails).
  void expect(std::string check, int n, std::optional<double> theta, bool holds) {
    record(std::move(check), n, theta, holds ? 0.0 : 1.0, 0.5);
  }

 private:
  std::vector<CheckResult>& out_;
};

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Largest gap between a clustered spectrum's eigenvalue list and a closed one.
double eigen_gap(const std::vector<double>& numeric, const std::vector<double>& closed) {
  if (numeric.size() != closed.size()) return INFINITY;
  double dev = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) dev = std::max(dev, std::abs(numeric[i] - closed[i]));
  return dev;
}

void check_ambient(int n, const VerifyOptions& opt, NormalStream& rng, Recorder& rec) {
  const AmbientModel model = build_chn(n);
  const Index m = model.dim();

  rec.expect("ambient_jacobi", n, std::nullopt, validate(model.alg).empty());

  double conn = 0.0, curv = 0.0, sec = 0.0, range = 0.0;
  for (int s = 0; s < opt.random_samples; ++s) {
    const Vector x = rng.vector(m), y = rng.vector(m), z = rng.vector(m);
    conn = std::max(conn, max_abs(levi_civita(model.alg, x, y) - connection_closed(model, x, y)));
    curv = std::max(curv, max_abs(riemann(model.alg, x, y, z) - curvature_closed(model, x, y, z)));
    const Plane p = random_plane(m, rng);
    const double k = sectional(model.alg, p);
    sec = std::max(sec, std::abs(k - sectional_closed(model, p)));
    range = std::max({range, k - (-0.25), -1.0 - k});
  }
  rec.record("ambient_connection", n, std::nullopt, conn, opt.tol);
  rec.record("ambient_curvature", n, std::nullopt, curv, opt.tol);
  rec.record("ambient_sectional", n, std::nullopt, sec, opt.tol);
  rec.record("ambient_sectional_range", n, std::nullopt, std::max(range, 0.0), opt.tol);

  const Matrix ric = ricci_matrix(model.alg);
  rec.record("einstein", n, std::nullopt, max_abs(ric + (n + 1) / 2.0 * Matrix::Identity(m, m)), opt.tol);

  const Matrix whole = Matrix::Identity(m, m);
  const Matrix derived = commutator_space(model.alg, whole, whole);
  rec.expect("derived_algebra_dim", n, std::nullopt, derived.cols() == 2 * n - 1);
}

void check_hypersurface(int n, double theta, const VerifyOptions& opt, NormalStream& rng, Recorder& rec) {
  const HypersurfaceFrame frame = build_hypersurface(n, theta);
  const Index m = frame.dim();
  const double c = frame.cos_theta;

  rec.expect("sub_jacobi", n, theta, validate(frame.sub).empty());

  const Matrix shape = shape_operator(frame);
  rec.record("shape_operator", n, theta, max_abs(shape - shape_operator_closed(frame)), opt.tol);

  // h against the ambient connection.
  double h_dev = 0.0;
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      const Vector ta = frame.tangent_basis.col(a), tb = frame.tangent_basis.col(b);
      h_dev = std::max(h_dev, std::abs(second_fundamental_form(frame, ta, tb) -
                                       levi_civita(frame.ambient.alg, ta, tb).dot(frame.xi)));
    }
  rec.record("second_fundamental_form", n, theta, h_dev, opt.tol);

  rec.record("principal_curvatures", n, theta,
             eigen_gap(principal_curvatures(frame).eigenvalues, principal_curvatures_closed(frame).eigenvalues),
             opt.tol);
  rec.record("mean_curvature", n, theta, std::abs(mean_curvature(frame) - mean_curvature_closed(n, theta)), opt.tol);

  const ExtrinsicFlags flags = classify_extrinsic(frame);
  rec.record("hopf_off_norm", n, theta, std::abs(flags.hopf_off_norm - 0.5 * c * c * c), opt.tol);
  rec.expect("flag_minimal", n, theta, flags.minimal == (theta == 0.0));
  rec.expect("flag_hopf", n, theta, flags.hopf == frame.is_horosphere());
  if (theta == 0.0) rec.expect("flag_austere", n, theta, flags.austere);

  const Matrix ric = ricci_matrix(frame.sub);
  rec.record("ricci", n, theta, max_abs(ric - intrinsic_ricci(frame)), opt.tol);
  rec.record("principal_ricci", n, theta,
             eigen_gap(principal_ricci(frame).eigenvalues, principal_ricci_closed(frame).eigenvalues), opt.tol);
  const auto alpha = principal_ricci_values(n, theta);
  rec.expect("principal_ricci_order", n, theta,
             frame.is_horosphere() ? alpha[0] == alpha[1] && alpha[1] < alpha[2]
                                   : alpha[0] < alpha[1] && alpha[1] < alpha[2]);
  rec.record("scalar", n, theta, std::abs(scalar_curvature(frame.sub) - intrinsic_scalar(frame)), opt.tol);
  rec.expect("scalar_negative", n, theta, intrinsic_scalar(frame) < 0.0);

  double sec = 0.0;
  for (int s = 0; s < opt.random_samples; ++s) {
    const Plane p = to_ambient(frame, random_plane(m, rng));
    const double closed = intrinsic_sectional(frame, p);
    const double gauss = gauss_sectional(frame, p);
    const double oracle = oracle_sectional(frame, p);
    sec = std::max({sec, std::abs(closed - gauss), std::abs(closed - oracle), std::abs(gauss - oracle)});
  }
  rec.record("intrinsic_sectional", n, theta, sec, opt.tol);

  const ExtremaReport ext = sectional_extrema(frame, opt.search);
  rec.record("sectional_max_search", n, theta, std::abs(ext.max_search - ext.max_closed), opt.search_tol);
  if (ext.min_closed)
    rec.record("sectional_min_search", n, theta, std::abs(ext.min_search - *ext.min_closed), opt.search_tol);
  double excess = ext.max_search - ext.max_closed;
  for (int s = 0; s < opt.random_samples; ++s)
    excess = std::max(excess, sectional(frame.sub, random_plane(m, rng)) - ext.max_closed);
  rec.record("sectional_max_bound", n, theta, std::max(excess, 0.0), opt.tol);

  rec.expect("nilpotent_iff_horosphere", n, theta, is_nilpotent(frame.sub) == frame.is_horosphere());
  rec.expect("solvable", n, theta, is_solvable(frame.sub));
}

void check_comparison(const VerifyOptions& opt, Recorder& rec) {
  double negative = 0.0, endpoints = 0.0;
  bool interior_positive = true;
  const auto grid = theta_grid(101);
  for (const double theta : grid) {
    const double gap = compare_extrema(theta).max_gap;
    negative = std::max(negative, -gap);
    if (theta == grid.front() || theta == grid.back())
      endpoints = std::max(endpoints, std::abs(gap));
    else
      interior_positive = interior_positive && gap > 0.0;
  }
  rec.record("comparison_nonnegative", 0, std::nullopt, negative, 1e-12);
  rec.record("comparison_endpoints", 0, std::nullopt, endpoints, opt.tol);
  rec.expect("comparison_interior_positive", 0, std::nullopt, interior_positive);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  for (const int n : options.n_list)
    if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
  if (options.theta_samples < 2) throw std::invalid_argument("need at least 2 theta samples");
  if (options.random_samples < 1) throw std::invalid_argument("need at least 1 random sample");
  options.search.check();

  std::vector<CheckResult> results;
  Recorder rec(results);
  NormalStream rng(mix_seed(options.search.seed, 0x766572696679ULL));
  for (const int n : options.n_list) {
    check_ambient(n, options, rng, rec);
    for (const double theta : theta_grid(options.theta_samples)) check_hypersurface(n, theta, options, rng, rec);
  }
  check_comparison(options, rec);
  return results;
}

}  // namespace liecurve
