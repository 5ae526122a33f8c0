#include "liecurve/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace liecurve {

int SpectrumReport::dimension() const {
  return std::accumulate(clusters.begin(), clusters.end(), 0,
                         [](int acc, const SpectrumCluster& c) { return acc + c.multiplicity; });
}

std::vector<SpectrumCluster> cluster_sorted(const std::vector<double>& sorted, double tol) {
  std::vector<SpectrumCluster> out;
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (count > 0 && sorted[i] - sorted[i - 1] > tol) {
      out.push_back({sum / count, count});
      sum = 0.0;
      count = 0;
    }
    sum += sorted[i];
    ++count;
  }
  if (count > 0) out.push_back({sum / count, count});
  return out;
}

SpectrumReport spectrum(const Matrix& symmetric, double cluster_tol) {
  if (symmetric.rows() != symmetric.cols()) throw DimensionMismatch("spectrum of a non-square matrix");
  if (symmetric.size() > 0 && (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff() > 1e-8)
    throw NonSymmetric("spectrum requires a symmetric matrix");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  SpectrumReport report;
  report.cluster_tol = cluster_tol;
  const auto& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  report.clusters = cluster_sorted(report.eigenvalues, cluster_tol);
  return report;
}

}  // namespace liecurve
