#pragma once

#include <vector>

#include "liecurve/metric_lie_algebra.hpp"

namespace liecurve {

struct SpectrumCluster {
  double value;
  int multiplicity;
};

/// Eigenvalues of a symmetric operator grouped into clusters.
struct SpectrumReport {
  std::vector<SpectrumCluster> clusters;
  double cluster_tol = 1e-6;
  /// Sorted ascending, repeated according to multiplicity.
  std::vector<double> eigenvalues;

  int dimension() const;
};

/// Single-linkage clustering of an ascending list: neighbours closer than
/// `tol` share a cluster, represented by the cluster mean.
std::vector<SpectrumCluster> cluster_sorted(const std::vector<double>& sorted, double tol);

/// Throws NonSymmetric if |M - M^T| exceeds 1e-8 anywhere.
SpectrumReport spectrum(const Matrix& symmetric, double cluster_tol = 1e-6);

}  // namespace liecurve
