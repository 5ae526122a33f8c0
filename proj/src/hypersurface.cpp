#include "liecurve/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace liecurve {

namespace {

struct SinCos {
  double s, c;
};

SinCos sincos_exact(double theta) {
  if (theta == kHalfPi) return {1.0, 0.0};
  return {std::sin(theta), std::cos(theta)};
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi))
    throw InvalidTheta("theta must lie in [0, pi/2], got " + std::to_string(theta));
}

constexpr double kTangentTol = 1e-8;

void check_tangent(const HypersurfaceFrame& frame, const Vector& x) {
  detail::check_length(frame.ambient.alg, x);
  const double normal = x.dot(frame.xi);
  if (std::abs(normal) > kTangentTol)
    throw NotTangent("vector has normal component " + std::to_string(normal));
}

SpectrumReport closed_spectrum(const std::array<double, 3>& values, int n, bool merged) {
  SpectrumReport report;
  report.cluster_tol = 0.0;
  if (merged) {
    report.clusters = {{values[0], 2 * n - 2}, {values[2], 1}};
  } else {
    report.clusters = {{values[0], 1}, {values[1], 2 * n - 3}, {values[2], 1}};
  }
  for (const auto& c : report.clusters) report.eigenvalues.insert(report.eigenvalues.end(), c.multiplicity, c.value);
  return report;
}

}  // namespace

HypersurfaceFrame build_hypersurface(int n, double theta) {
  check_theta(theta);
  HypersurfaceFrame frame;
  frame.ambient = build_chn(n);
  const AmbientModel& amb = frame.ambient;
  frame.theta = theta;
  const auto [s, c] = sincos_exact(theta);
  frame.sin_theta = s;
  frame.cos_theta = c;

  frame.xi = c * amb.X(1) + s * amb.A0();
  frame.T = c * amb.A0() - s * amb.X(1);

  const Index m = 2 * n - 1;
  frame.tangent_basis = Matrix::Zero(amb.dim(), m);
  std::vector<std::string> labels{"T", "Y1"};
  frame.tangent_basis.col(frame.t_index()) = frame.T;
  frame.tangent_basis.col(frame.y1_index()) = amb.Y(1);
  for (int i = 2; i < n; ++i) {
    frame.tangent_basis.col(frame.v0_begin() + 2 * (i - 2)) = amb.X(i);
    frame.tangent_basis.col(frame.v0_begin() + 2 * (i - 2) + 1) = amb.Y(i);
    labels.push_back("X" + std::to_string(i));
    labels.push_back("Y" + std::to_string(i));
  }
  frame.tangent_basis.col(frame.z_index()) = amb.Z0();
  labels.push_back("Z0");

  MetricLieAlgebra sub(m, std::move(labels));
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) {
      const Vector br = bracket<double>(amb.alg, frame.tangent_basis.col(a), frame.tangent_basis.col(b));
      if (std::abs(br.dot(frame.xi)) > 1e-12)
        throw Error("s(theta) is not closed under the bracket at (" + std::to_string(a) + ", " + std::to_string(b) +
                    ")");
      sub.set_bracket(a, b, frame.tangent_basis.transpose() * br);
    }
  frame.sub = std::move(sub);
  return frame;
}

Vector to_tangent(const HypersurfaceFrame& frame, const Vector& x) {
  check_tangent(frame, x);
  return frame.tangent_basis.transpose() * x;
}

Vector to_ambient(const HypersurfaceFrame& frame, const Vector& coords) {
  detail::check_length(frame.sub, coords);
  return frame.tangent_basis * coords;
}

Plane to_tangent(const HypersurfaceFrame& frame, const Plane& plane) {
  return {to_tangent(frame, plane.x), to_tangent(frame, plane.y)};
}

Plane to_ambient(const HypersurfaceFrame& frame, const Plane& plane) {
  return {to_ambient(frame, plane.x), to_ambient(frame, plane.y)};
}

TangentDecomposition decompose(const HypersurfaceFrame& frame, const Vector& x) {
  check_tangent(frame, x);
  const AmbientModel& amb = frame.ambient;
  TangentDecomposition d{x.dot(frame.T), x[amb.y_index(1)], x[amb.z_index()], Vector::Zero(amb.dim())};
  for (int i = 2; i < amb.n; ++i) {
    d.v[amb.x_index(i)] = x[amb.x_index(i)];
    d.v[amb.y_index(i)] = x[amb.y_index(i)];
  }
  return d;
}

double second_fundamental_form(const HypersurfaceFrame& frame, const Vector& x, const Vector& y) {
  const auto dx = decompose(frame, x);
  const auto dy = decompose(frame, y);
  return 0.5 * ((x.dot(y) + dx.a3 * dy.a3) * frame.sin_theta + (dx.a2 * dy.a3 + dx.a3 * dy.a2) * frame.cos_theta);
}

Matrix shape_operator(const HypersurfaceFrame& frame) {
  const Index m = frame.dim();
  Matrix shape(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      shape(a, b) = second_fundamental_form(frame, frame.tangent_basis.col(b), frame.tangent_basis.col(a));
  return shape;
}

Matrix shape_operator_closed(const HypersurfaceFrame& frame) {
  const double s = frame.sin_theta, c = frame.cos_theta;
  const Index m = frame.dim();
  Matrix shape = Matrix::Zero(m, m);
  shape(frame.t_index(), frame.t_index()) = 0.5 * s;
  shape(frame.y1_index(), frame.y1_index()) = 0.5 * s;
  shape(frame.z_index(), frame.y1_index()) = 0.5 * c;
  for (Index k = 0; k < frame.v0_size(); ++k) shape(frame.v0_begin() + k, frame.v0_begin() + k) = 0.5 * s;
  shape(frame.y1_index(), frame.z_index()) = 0.5 * c;
  shape(frame.z_index(), frame.z_index()) = s;
  return shape;
}

std::array<double, 3> principal_curvature_values(double theta) {
  check_theta(theta);
  const auto [s, c] = sincos_exact(theta);
  const double root = std::sqrt(1.0 + 3.0 * c * c);
  return {0.75 * s - 0.25 * root, 0.5 * s, 0.75 * s + 0.25 * root};
}

SpectrumReport principal_curvatures(const HypersurfaceFrame& frame, double cluster_tol) {
  return spectrum(shape_operator(frame), cluster_tol);
}

SpectrumReport principal_curvatures_closed(const HypersurfaceFrame& frame) {
  return closed_spectrum(principal_curvature_values(frame.theta), frame.n(), frame.is_horosphere());
}

double mean_curvature(const HypersurfaceFrame& frame) {
  return shape_operator(frame).trace() / static_cast<double>(frame.dim());
}

double mean_curvature_closed(int n, double theta) {
  check_theta(theta);
  return n / (2.0 * n - 1.0) * sincos_exact(theta).s;
}

ExtrinsicFlags classify_extrinsic(const HypersurfaceFrame& frame, double tol) {
  const Matrix shape = shape_operator(frame);
  ExtrinsicFlags flags{};
  flags.minimal = std::abs(shape.trace() / static_cast<double>(frame.dim())) <= tol;

  const auto ev = spectrum(shape).eigenvalues;
  double asymmetry = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) asymmetry = std::max(asymmetry, std::abs(ev[i] + ev[ev.size() - 1 - i]));
  flags.austere = asymmetry <= tol;

  const Vector jxi = to_tangent(frame, frame.structure_vector());
  const Vector image = shape * jxi;
  flags.hopf_off_norm = (image - image.dot(jxi) * jxi).norm();
  flags.hopf = flags.hopf_off_norm <= tol;
  return flags;
}

Vector induced_connection(const HypersurfaceFrame& frame, const Vector& x, const Vector& y) {
  check_tangent(frame, x);
  check_tangent(frame, y);
  const Vector ambient = levi_civita(frame.ambient.alg, x, y);
  return ambient - ambient.dot(frame.xi) * frame.xi;
}

Matrix intrinsic_ricci(const HypersurfaceFrame& frame) {
  const int n = frame.n();
  const double s = frame.sin_theta, c = frame.cos_theta, c2 = c * c;
  const double on_t_v0 = -0.25 * (2.0 + (2 * n - 1) * c2);
  const double mixed = 0.5 * n * s * c;
  const Index m = frame.dim();

  Matrix ric = Matrix::Zero(m, m);
  ric(frame.t_index(), frame.t_index()) = on_t_v0;
  for (Index k = 0; k < frame.v0_size(); ++k) ric(frame.v0_begin() + k, frame.v0_begin() + k) = on_t_v0;
  ric(frame.y1_index(), frame.y1_index()) = -0.25 * (2.0 + (2 * n - 3) * c2);
  ric(frame.z_index(), frame.y1_index()) = mixed;
  ric(frame.y1_index(), frame.z_index()) = mixed;
  ric(frame.z_index(), frame.z_index()) = 0.5 * ((n - 1) - 2.0 * n * c2);
  return ric;
}

std::array<double, 3> principal_ricci_values(int n, double theta) {
  check_theta(theta);
  if (n < 2) throw InvalidDimension("complex dimension must be at least 2");
  const double c2 = std::pow(sincos_exact(theta).c, 2);
  const double disc = 4.0 * n * n + 4.0 * n * (2 * n - 3) * c2 - 3.0 * (2 * n + 1) * (2 * n - 3) * c2 * c2;
  const double centre = (n - 2) / 4.0 - (6.0 * n - 3.0) / 8.0 * c2;
  const double root = std::sqrt(disc);
  return {centre - root / 8.0, -0.5 - (2.0 * n - 1.0) / 4.0 * c2, centre + root / 8.0};
}

SpectrumReport principal_ricci(const HypersurfaceFrame& frame, double cluster_tol) {
  return spectrum(ricci_matrix(frame.sub), cluster_tol);
}

SpectrumReport principal_ricci_closed(const HypersurfaceFrame& frame) {
  return closed_spectrum(principal_ricci_values(frame.n(), frame.theta), frame.n(), frame.is_horosphere());
}

double intrinsic_scalar(const HypersurfaceFrame& frame) {
  const int n = frame.n();
  return -(n - 1) / 2.0 - n * (2.0 * n - 1.0) / 2.0 * frame.cos_theta * frame.cos_theta;
}

double intrinsic_sectional(const HypersurfaceFrame& frame, const Plane& plane) {
  check_orthonormal(plane);
  const auto dx = decompose(frame, plane.x);
  const auto dy = decompose(frame, plane.y);
  const double s = frame.sin_theta, c = frame.cos_theta;
  const double kahler = (frame.ambient.J * plane.x).dot(plane.y);
  const double cross = dx.a2 * dy.a3 - dx.a3 * dy.a2;
  return -0.25 - 0.75 * kahler * kahler + 0.25 * (1.0 + dx.a3 * dx.a3 + dy.a3 * dy.a3) * s * s +
         0.5 * (dx.a2 * dx.a3 + dy.a2 * dy.a3) * s * c - 0.25 * cross * cross * c * c;
}

double gauss_sectional(const HypersurfaceFrame& frame, const Plane& plane) {
  const double hxx = second_fundamental_form(frame, plane.x, plane.x);
  const double hyy = second_fundamental_form(frame, plane.y, plane.y);
  const double hxy = second_fundamental_form(frame, plane.x, plane.y);
  return sectional_closed(frame.ambient, plane) + hxx * hyy - hxy * hxy;
}

double oracle_sectional(const HypersurfaceFrame& frame, const Plane& plane) {
  return sectional(frame.sub, to_tangent(frame, plane));
}

ExtremaReport sectional_extrema_closed(const HypersurfaceFrame& frame) {
  const auto cmp = compare_extrema(frame.theta);
  const double c2 = frame.cos_theta * frame.cos_theta;
  ExtremaReport report{};
  report.theta = frame.theta;
  report.n = frame.n();
  report.C = cmp.C;
  report.D = cmp.D;
  if (frame.n() == 2) {
    report.max_closed = -0.25 - 0.375 * c2 + cmp.D / 8.0;
    report.min_closed = -0.25 - 0.375 * c2 - cmp.D / 8.0;
  } else {
    const double s = frame.sin_theta;
    report.max_closed = -0.25 + 0.375 * s * s + s * std::sqrt(s * s + 4.0 * c2) / 8.0;
  }
  return report;
}

ExtremaReport sectional_extrema(const HypersurfaceFrame& frame, const SearchConfig& cfg) {
  ExtremaReport report = sectional_extrema_closed(frame);
  const auto result =
      search_extrema([&frame](const Plane& p) { return sectional(frame.sub, p); }, frame.dim(), cfg);
  report.max_search = result.max;
  report.min_search = result.min;
  report.argmax = to_ambient(frame, result.argmax);
  report.argmin = to_ambient(frame, result.argmin);
  return report;
}

ExtremaComparison compare_extrema(double theta) {
  check_theta(theta);
  const auto [s, c] = sincos_exact(theta);
  const double s2 = s * s, c2 = c * c;
  ExtremaComparison cmp{};
  cmp.C = 3.0 + s * std::sqrt(s2 + 4.0 * c2);
  cmp.D = std::sqrt(16.0 * s2 * s2 + 9.0 * c2 * c2 + 40.0 * s2 * c2);
  // C - D = 24 s c^6 / ((sqrt(1 + 3c^2) + sqrt(1 + 3c^2 - 4c^6)) (C + D)), free of cancellation.
  const double r1 = std::sqrt(1.0 + 3.0 * c2);
  const double r2 = std::sqrt(std::max(0.0, 1.0 + 3.0 * c2 - 4.0 * c2 * c2 * c2));
  cmp.max_gap = 3.0 * s * c2 * c2 * c2 / ((r1 + r2) * (cmp.C + cmp.D));
  return cmp;
}

}  // namespace liecurve
