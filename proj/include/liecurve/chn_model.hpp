#pragma once

// Solvable model of the complex hyperbolic space CH^n, normalized to
// holomorphic sectional curvature -1.
//
// Basis order: A0, X1, Y1, ..., X_{n-1}, Y_{n-1}, Z0, orthonormal, with
//   [A0, X_i] = X_i / 2,  [A0, Y_i] = Y_i / 2,  [A0, Z0] = Z0,  [X_i, Y_i] = Z0
// and complex structure J A0 = Z0, J X_i = Y_i.

#include <json.hpp>

#include "liecurve/metric_lie_algebra.hpp"

namespace liecurve {

struct AmbientModel {
  int n = 0;
  MetricLieAlgebra alg;
  Matrix J;

  Index dim() const { return 2 * n; }
  Index a_index() const { return 0; }
  /// 1 <= i <= n-1.
  Index x_index(int i) const { return 2 * i - 1; }
  Index y_index(int i) const { return 2 * i; }
  Index z_index() const { return 2 * n - 1; }
  /// The v-part occupies the contiguous range [v_begin, v_begin + v_size).
  Index v_begin() const { return 1; }
  Index v_size() const { return 2 * n - 2; }

  Vector A0() const { return Vector::Unit(dim(), a_index()); }
  Vector X(int i) const { return Vector::Unit(dim(), x_index(i)); }
  Vector Y(int i) const { return Vector::Unit(dim(), y_index(i)); }
  Vector Z0() const { return Vector::Unit(dim(), z_index()); }

  /// Projection onto the v-part (a and z coordinates zeroed).
  Vector v_part(const Vector& x) const;
};

/// Throws InvalidDimension for n < 2.
AmbientModel build_chn(int n);

/// Levi-Civita connection from the a + v + z decomposition
/// x = a1 A0 + V + a2 Z0, y = b1 A0 + W + b2 Z0:
///   2 nabla_x y = (<V,W> + 2 a2 b2) A0 - b1 V - a2 JW - b2 JV + (<JV,W> - 2 a2 b1) Z0.
Vector connection_closed(const AmbientModel& model, const Vector& x, const Vector& y);

/// 4 R(x,y)z = <y,z>x - <x,z>y + <Jy,z>Jx - <Jx,z>Jy - 2<Jx,y>Jz.
Vector curvature_closed(const AmbientModel& model, const Vector& x, const Vector& y, const Vector& z);

/// -1/4 - (3/4) <Jx, y>^2.
double sectional_closed(const AmbientModel& model, const Plane& plane);

/// Ricci operator from the oracle, checked against a scalar multiple of the
/// identity; throws NotEinstein if it deviates by more than `tol`.
double einstein_constant(const AmbientModel& model, double tol = 1e-9);

nlohmann::json export_algebra(const AmbientModel& model);

}  // namespace liecurve
