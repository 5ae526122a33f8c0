#pragma once

// Lie hypersurfaces S(theta) of CH^n: orbits of the codimension-one
// subalgebra s(theta) = s minus R(cos(theta) X1 + sin(theta) A0),
// theta in [0, pi/2]. theta = 0 is the ruled minimal hypersurface,
// theta = pi/2 the horosphere.
//
// Vectors passed to these functions live in the ambient basis of
// AmbientModel (length 2n). Matrices describing operators on s(theta)
// (shape operator, Ricci) are written in the tangent basis
//   T, Y1, X2, Y2, ..., X_{n-1}, Y_{n-1}, Z0,   T = cos(theta) A0 - sin(theta) X1.

#include <array>
#include <numbers>
#include <optional>

#include "liecurve/chn_model.hpp"
#include "liecurve/plane_search.hpp"
#include "liecurve/spectrum.hpp"

namespace liecurve {

inline constexpr double kHalfPi = std::numbers::pi / 2;

struct HypersurfaceFrame {
  AmbientModel ambient;
  double theta = 0.0;
  /// Exact at the endpoints: cos(pi/2) is stored as 0.
  double sin_theta = 0.0;
  double cos_theta = 1.0;
  Vector xi;
  Vector T;
  /// Columns are the tangent basis vectors in ambient coordinates.
  Matrix tangent_basis;
  /// s(theta) with structure constants in the tangent basis.
  MetricLieAlgebra sub;

  int n() const { return ambient.n; }
  Index dim() const { return tangent_basis.cols(); }
  bool is_horosphere() const { return theta == kHalfPi; }

  Index t_index() const { return 0; }
  Index y1_index() const { return 1; }
  /// v0 = span{X2, Y2, ...} occupies [v0_begin, v0_begin + v0_size); empty for n = 2.
  Index v0_begin() const { return 2; }
  Index v0_size() const { return 2 * ambient.n - 4; }
  Index z_index() const { return 2 * ambient.n - 2; }

  /// J xi = cos(theta) Y1 + sin(theta) Z0, the structure vector field.
  Vector structure_vector() const { return ambient.J * xi; }
};

/// Throws InvalidDimension for n < 2, InvalidTheta outside [0, pi/2].
HypersurfaceFrame build_hypersurface(int n, double theta);

/// Ambient vector to tangent-basis coordinates; throws NotTangent if
/// |<x, xi>| > 1e-8.
Vector to_tangent(const HypersurfaceFrame& frame, const Vector& x);
Vector to_ambient(const HypersurfaceFrame& frame, const Vector& coords);
Plane to_tangent(const HypersurfaceFrame& frame, const Plane& plane);
Plane to_ambient(const HypersurfaceFrame& frame, const Plane& plane);

/// Coefficients of x = a1 T + a2 Y1 + V + a3 Z0 with V in v0.
struct TangentDecomposition {
  double a1, a2, a3;
  Vector v;
};
TangentDecomposition decompose(const HypersurfaceFrame& frame, const Vector& x);

// Extrinsic geometry

/// Coefficient of xi in h(x, y), from the closed form
/// 2h = (<x,y> + a3 b3) sin(theta) + (a2 b3 + a3 b2) cos(theta).
double second_fundamental_form(const HypersurfaceFrame& frame, const Vector& x, const Vector& y);

/// Shape operator assembled from h: entry (a, b) = h(t_b, t_a).
Matrix shape_operator(const HypersurfaceFrame& frame);

/// The shape operator written down entry by entry from its known action on
/// T, Y1, v0 and Z0.
Matrix shape_operator_closed(const HypersurfaceFrame& frame);

/// lambda1 <= lambda2 < lambda3 as functions of theta.
std::array<double, 3> principal_curvature_values(double theta);

/// Numerical spectrum of shape_operator, clustered with cluster_tol.
SpectrumReport principal_curvatures(const HypersurfaceFrame& frame, double cluster_tol = 1e-6);

/// Closed-form values with multiplicities (1, 2n-3, 1), or (2n-2, 1) at
/// theta = pi/2 exactly.
SpectrumReport principal_curvatures_closed(const HypersurfaceFrame& frame);

double mean_curvature(const HypersurfaceFrame& frame);
double mean_curvature_closed(int n, double theta);

struct ExtrinsicFlags {
  bool minimal;
  bool austere;
  bool hopf;
  /// |A(J xi) - <A(J xi), J xi> J xi|; equals cos^3(theta) / 2.
  double hopf_off_norm;
};

ExtrinsicFlags classify_extrinsic(const HypersurfaceFrame& frame, double tol = 1e-9);

// Intrinsic geometry

/// Tangential part of the ambient connection, returned in ambient coordinates.
Vector induced_connection(const HypersurfaceFrame& frame, const Vector& x, const Vector& y);

/// Closed-form Ricci operator in the tangent basis.
Matrix intrinsic_ricci(const HypersurfaceFrame& frame);

/// alpha1 <= alpha2 < alpha3 as functions of (n, theta).
std::array<double, 3> principal_ricci_values(int n, double theta);

/// Numerical spectrum of the structure-constant Ricci operator of s(theta).
SpectrumReport principal_ricci(const HypersurfaceFrame& frame, double cluster_tol = 1e-6);

SpectrumReport principal_ricci_closed(const HypersurfaceFrame& frame);

/// -(n-1)/2 - (n(2n-1)/2) cos^2(theta); negative for every theta.
double intrinsic_scalar(const HypersurfaceFrame& frame);

/// Closed-form sectional curvature of a tangent plane given in ambient
/// coordinates.
double intrinsic_sectional(const HypersurfaceFrame& frame, const Plane& plane);

/// Gauss equation: ambient sectional curvature plus h(x,x)h(y,y) - h(x,y)^2.
double gauss_sectional(const HypersurfaceFrame& frame, const Plane& plane);

/// Structure-constant sectional curvature of s(theta).
double oracle_sectional(const HypersurfaceFrame& frame, const Plane& plane);

struct ExtremaReport {
  double theta;
  int n;
  double max_closed;
  /// Only known in closed form for n = 2.
  std::optional<double> min_closed;
  double max_search = 0.0;
  double min_search = 0.0;
  /// Ambient coordinates.
  Plane argmax;
  Plane argmin;
  double C;
  double D;
};

/// Closed-form fields only; the search fields are left at zero.
ExtremaReport sectional_extrema_closed(const HypersurfaceFrame& frame);

/// Closed-form fields plus a plane search over s(theta) with the oracle
/// sectional curvature as objective.
ExtremaReport sectional_extrema(const HypersurfaceFrame& frame, const SearchConfig& cfg);

struct ExtremaComparison {
  double C;
  double D;
  /// max K for n > 2 minus max K for n = 2, i.e. (C - D) / 8.
  double max_gap;
};

ExtremaComparison compare_extrema(double theta);

}  // namespace liecurve
