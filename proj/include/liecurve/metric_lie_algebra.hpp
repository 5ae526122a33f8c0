#pragma once

// Curvature of a left-invariant metric on a Lie group, computed from the
// structure constants of its Lie algebra in an orthonormal basis.
//
// Conventions (all operators act on left-invariant fields):
//   [e_i, e_j]          = sum_k c(i,j,k) e_k
//   nabla_x y           = (1/2)[x,y] + U(x,y),
//   2 <U(x,y), z>       = <[z,x],y> + <x,[z,y]>
//   R(x,y)z             = nabla_[x,y] z - nabla_x nabla_y z + nabla_y nabla_x z
//   Ric(x)              = sum_i R(e_i, x) e_i
//   K(span{x,y})        = <R(x,y)x, y>          for orthonormal x, y
//
// With this sign of R the sectional curvature of the round sphere is positive.

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "liecurve/errors.hpp"

namespace liecurve {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/**
 * Finite-dimensional real Lie algebra with the inner product that makes the
 * declared basis orthonormal.
 *
 * The structure tensor is stored densely as the adjoint matrices ad(e_i),
 * whose column j holds the coordinates of [e_i, e_j].
 */
template <typename Scalar_>
class BasicMetricLieAlgebra {
 public:
  using Scalar = Scalar_;
  using Vector = VectorX<Scalar>;
  using Matrix = MatrixX<Scalar>;

  BasicMetricLieAlgebra() = default;

  explicit BasicMetricLieAlgebra(Index dim, std::vector<std::string> labels = {})
      : dim_(dim), ad_(static_cast<std::size_t>(dim), Matrix::Zero(dim, dim)), labels_(std::move(labels)) {
    if (dim <= 0) throw InvalidDimension("algebra dimension must be positive");
    if (!labels_.empty() && static_cast<Index>(labels_.size()) != dim)
      throw DimensionMismatch("label count does not match algebra dimension");
  }

  Index dim() const { return dim_; }

  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(Index i) const {
    if (!labels_.empty()) return labels_[static_cast<std::size_t>(i)];
    return "e" + std::to_string(i);
  }

  /// Raw structure constant c(i,j,k); no symmetry is imposed on writes.
  Scalar& coeff(Index i, Index j, Index k) { return ad_[static_cast<std::size_t>(i)](k, j); }
  Scalar coeff(Index i, Index j, Index k) const { return ad_[static_cast<std::size_t>(i)](k, j); }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(Index i, Index j, const Vector& value) {
    if (value.size() != dim_) throw DimensionMismatch("bracket value has wrong length");
    ad_[static_cast<std::size_t>(i)].col(j) = value;
    ad_[static_cast<std::size_t>(j)].col(i) = -value;
  }

  const Matrix& ad(Index i) const { return ad_[static_cast<std::size_t>(i)]; }

  Vector basis_vector(Index i) const { return Vector::Unit(dim_, i); }

 private:
  Index dim_ = 0;
  std::vector<Matrix> ad_;
  std::vector<std::string> labels_;
};

using MetricLieAlgebra = BasicMetricLieAlgebra<double>;

/// Ordered pair (x, y) spanning a 2-plane; expected orthonormal.
template <typename Scalar>
struct BasicPlane {
  VectorX<Scalar> x;
  VectorX<Scalar> y;
};

using Plane = BasicPlane<double>;
using Vector = VectorX<double>;
using Matrix = MatrixX<double>;

struct Violation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  Index i, j, k;
  double magnitude;
  std::string description;
};

namespace detail {

template <typename Alg, typename V>
void check_length(const Alg& alg, const V& v) {
  if (v.size() != alg.dim())
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in algebra of dimension " +
                            std::to_string(alg.dim()));
}

inline std::string format_violation(const char* what, Index i, Index j, Index k, double magnitude) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s violated at (%ld, %ld, %ld): magnitude %.3e", what, static_cast<long>(i),
                static_cast<long>(j), static_cast<long>(k), magnitude);
  return buf;
}

}  // namespace detail

template <typename Scalar>
VectorX<Scalar> bracket(const BasicMetricLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x, const VectorX<Scalar>& y) {
  detail::check_length(alg, x);
  detail::check_length(alg, y);
  VectorX<Scalar> out = VectorX<Scalar>::Zero(alg.dim());
  for (Index i = 0; i < alg.dim(); ++i) {
    if (x[i] != Scalar(0)) out.noalias() += x[i] * (alg.ad(i) * y);
  }
  return out;
}

/**
 * Lists every antisymmetry and Jacobi violation above `tol`.
 *
 * Antisymmetry is checked on all i <= j (the diagonal must vanish); the
 * Jacobi cyclic sum on all i < j < k, which covers every triple once the
 * tensor is antisymmetric.
 */
template <typename Scalar>
std::vector<Violation> validate(const BasicMetricLieAlgebra<Scalar>& alg, double tol = 1e-12) {
  std::vector<Violation> out;
  const Index m = alg.dim();
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j)
      for (Index k = 0; k < m; ++k) {
        const double r = std::abs(static_cast<double>(alg.coeff(i, j, k) + alg.coeff(j, i, k)));
        if (r > tol)
          out.push_back({Violation::Kind::antisymmetry, i, j, k, r,
                         detail::format_violation("antisymmetry", i, j, k, r)});
      }

  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j)
      for (Index k = j + 1; k < m; ++k) {
        const auto ei = alg.basis_vector(i), ej = alg.basis_vector(j), ek = alg.basis_vector(k);
        const VectorX<Scalar> cyc = bracket(alg, bracket(alg, ei, ej), ek) + bracket(alg, bracket(alg, ej, ek), ei) +
                                    bracket(alg, bracket(alg, ek, ei), ej);
        const double r = static_cast<double>(cyc.cwiseAbs().maxCoeff());
        if (r > tol)
          out.push_back({Violation::Kind::jacobi, i, j, k, r, detail::format_violation("jacobi", i, j, k, r)});
      }
  return out;
}

/// Symmetric part of the Levi-Civita connection.
template <typename Scalar>
VectorX<Scalar> koszul_u(const BasicMetricLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x,
                         const VectorX<Scalar>& y) {
  detail::check_length(alg, x);
  detail::check_length(alg, y);
  VectorX<Scalar> out(alg.dim());
  for (Index k = 0; k < alg.dim(); ++k) {
    const auto& ad = alg.ad(k);
    out[k] = Scalar(0.5) * (y.dot(ad * x) + x.dot(ad * y));
  }
  return out;
}

template <typename Scalar>
VectorX<Scalar> levi_civita(const BasicMetricLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x,
                            const VectorX<Scalar>& y) {
  return Scalar(0.5) * bracket(alg, x, y) + koszul_u(alg, x, y);
}

template <typename Scalar>
VectorX<Scalar> riemann(const BasicMetricLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x, const VectorX<Scalar>& y,
                        const VectorX<Scalar>& z) {
  detail::check_length(alg, z);
  return levi_civita(alg, bracket(alg, x, y), z) - levi_civita(alg, x, levi_civita(alg, y, z)) +
         levi_civita(alg, y, levi_civita(alg, x, z));
}

/// Ricci operator in the declared basis; column j is Ric(e_j).
template <typename Scalar>
MatrixX<Scalar> ricci_matrix(const BasicMetricLieAlgebra<Scalar>& alg) {
  const Index m = alg.dim();
  MatrixX<Scalar> ric = MatrixX<Scalar>::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    const auto ej = alg.basis_vector(j);
    for (Index i = 0; i < m; ++i) {
      const auto ei = alg.basis_vector(i);
      ric.col(j) += riemann(alg, ei, ej, ei);
    }
  }
  return ric;
}

template <typename Scalar>
Scalar scalar_curvature(const BasicMetricLieAlgebra<Scalar>& alg) {
  return ricci_matrix(alg).trace();
}

/// Throws DegeneratePlane if (x, y) is not orthonormal within `tol`.
template <typename Scalar>
void check_orthonormal(const BasicPlane<Scalar>& plane, double tol = 1e-8) {
  const double ex = std::abs(static_cast<double>(plane.x.squaredNorm()) - 1.0);
  const double ey = std::abs(static_cast<double>(plane.y.squaredNorm()) - 1.0);
  const double exy = std::abs(static_cast<double>(plane.x.dot(plane.y)));
  if (ex > tol || ey > tol || exy > tol) throw DegeneratePlane("plane basis is not orthonormal");
}

template <typename Scalar>
Scalar sectional(const BasicMetricLieAlgebra<Scalar>& alg, const BasicPlane<Scalar>& plane) {
  detail::check_length(alg, plane.x);
  detail::check_length(alg, plane.y);
  check_orthonormal(plane);
  return riemann(alg, plane.x, plane.y, plane.x).dot(plane.y);
}

// Subalgebra series

/// Orthonormal basis (as columns) of the column span of `generators`.
template <typename Scalar>
MatrixX<Scalar> span_basis(const MatrixX<Scalar>& generators, double tol = 1e-10) {
  if (generators.cols() == 0) return MatrixX<Scalar>(generators.rows(), 0);
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(generators, Eigen::ComputeThinU);
  Index rank = 0;
  const auto& sv = svd.singularValues();
  while (rank < sv.size() && static_cast<double>(sv[rank]) > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of [A, B] for subspaces given by column bases.
template <typename Scalar>
MatrixX<Scalar> commutator_space(const BasicMetricLieAlgebra<Scalar>& alg, const MatrixX<Scalar>& a,
                                 const MatrixX<Scalar>& b, double tol = 1e-10) {
  MatrixX<Scalar> gens(alg.dim(), a.cols() * b.cols());
  Index c = 0;
  for (Index i = 0; i < a.cols(); ++i)
    for (Index j = 0; j < b.cols(); ++j) gens.col(c++) = bracket<Scalar>(alg, a.col(i), b.col(j));
  return span_basis(gens, tol);
}

/// Dimensions of g, [g,g], [g,[g,g]], ... until zero or stationary.
template <typename Scalar>
std::vector<Index> lower_central_series(const BasicMetricLieAlgebra<Scalar>& alg, double tol = 1e-10) {
  const MatrixX<Scalar> whole = MatrixX<Scalar>::Identity(alg.dim(), alg.dim());
  MatrixX<Scalar> term = whole;
  std::vector<Index> dims{term.cols()};
  while (term.cols() > 0) {
    MatrixX<Scalar> next = commutator_space(alg, whole, term, tol);
    if (next.cols() == term.cols()) break;
    term = std::move(next);
    dims.push_back(term.cols());
  }
  return dims;
}

/// Dimensions of g, [g,g], [[g,g],[g,g]], ... until zero or stationary.
template <typename Scalar>
std::vector<Index> derived_series(const BasicMetricLieAlgebra<Scalar>& alg, double tol = 1e-10) {
  MatrixX<Scalar> term = MatrixX<Scalar>::Identity(alg.dim(), alg.dim());
  std::vector<Index> dims{term.cols()};
  while (term.cols() > 0) {
    MatrixX<Scalar> next = commutator_space(alg, term, term, tol);
    if (next.cols() == term.cols()) break;
    term = std::move(next);
    dims.push_back(term.cols());
  }
  return dims;
}

template <typename Scalar>
bool is_nilpotent(const BasicMetricLieAlgebra<Scalar>& alg, double tol = 1e-10) {
  return lower_central_series(alg, tol).back() == 0;
}

template <typename Scalar>
bool is_solvable(const BasicMetricLieAlgebra<Scalar>& alg, double tol = 1e-10) {
  return derived_series(alg, tol).back() == 0;
}

}  // namespace liecurve
