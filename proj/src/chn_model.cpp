#include "liecurve/chn_model.hpp"

#include <string>

#include "liecurve/algebra_json.hpp"

namespace liecurve {

Vector AmbientModel::v_part(const Vector& x) const {
  Vector v = x;
  v[a_index()] = 0.0;
  v[z_index()] = 0.0;
  return v;
}

AmbientModel build_chn(int n) {
  if (n < 2) throw InvalidDimension("complex dimension must be at least 2, got " + std::to_string(n));

  AmbientModel model;
  model.n = n;
  const Index m = model.dim();

  std::vector<std::string> labels{"A0"};
  for (int i = 1; i < n; ++i) {
    labels.push_back("X" + std::to_string(i));
    labels.push_back("Y" + std::to_string(i));
  }
  labels.push_back("Z0");

  MetricLieAlgebra alg(m, std::move(labels));
  const Index a = model.a_index(), z = model.z_index();
  for (int i = 1; i < n; ++i) {
    const Index x = model.x_index(i), y = model.y_index(i);
    alg.set_bracket(a, x, 0.5 * Vector::Unit(m, x));
    alg.set_bracket(a, y, 0.5 * Vector::Unit(m, y));
    alg.set_bracket(x, y, Vector::Unit(m, z));
  }
  alg.set_bracket(a, z, Vector::Unit(m, z));
  model.alg = std::move(alg);

  model.J = Matrix::Zero(m, m);
  model.J(z, a) = 1.0;
  model.J(a, z) = -1.0;
  for (int i = 1; i < n; ++i) {
    model.J(model.y_index(i), model.x_index(i)) = 1.0;
    model.J(model.x_index(i), model.y_index(i)) = -1.0;
  }
  return model;
}

Vector connection_closed(const AmbientModel& model, const Vector& x, const Vector& y) {
  detail::check_length(model.alg, x);
  detail::check_length(model.alg, y);
  const double a2 = x[model.z_index()];
  const double b1 = y[model.a_index()], b2 = y[model.z_index()];
  const Vector v = model.v_part(x), w = model.v_part(y);
  const Vector jv = model.J * v, jw = model.J * w;

  Vector twice = -b1 * v - a2 * jw - b2 * jv;
  twice[model.a_index()] += v.dot(w) + 2.0 * a2 * b2;
  twice[model.z_index()] += jv.dot(w) - 2.0 * a2 * b1;
  return 0.5 * twice;
}

Vector curvature_closed(const AmbientModel& model, const Vector& x, const Vector& y, const Vector& z) {
  detail::check_length(model.alg, x);
  detail::check_length(model.alg, y);
  detail::check_length(model.alg, z);
  const Vector jx = model.J * x, jy = model.J * y, jz = model.J * z;
  return 0.25 * (y.dot(z) * x - x.dot(z) * y + jy.dot(z) * jx - jx.dot(z) * jy - 2.0 * jx.dot(y) * jz);
}

double sectional_closed(const AmbientModel& model, const Plane& plane) {
  detail::check_length(model.alg, plane.x);
  detail::check_length(model.alg, plane.y);
  check_orthonormal(plane);
  const double kahler = (model.J * plane.x).dot(plane.y);
  return -0.25 - 0.75 * kahler * kahler;
}

double einstein_constant(const AmbientModel& model, double tol) {
  const Matrix ric = ricci_matrix(model.alg);
  const double c = ric.trace() / static_cast<double>(ric.rows());
  const double deviation = (ric - c * Matrix::Identity(ric.rows(), ric.cols())).cwiseAbs().maxCoeff();
  if (deviation > tol)
    throw NotEinstein("Ricci operator deviates from a scalar map by " + std::to_string(deviation));
  return c;
}

nlohmann::json export_algebra(const AmbientModel& model) { return algebra_to_json(model.alg); }

}  // namespace liecurve
