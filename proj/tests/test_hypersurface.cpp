#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liecurve/hypersurface.hpp"

using namespace liecurve;

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

void check_clusters(const SpectrumReport& s, std::initializer_list<std::pair<double, int>> expected,
                    double tol = 1e-12) {
  REQUIRE(s.clusters.size() == expected.size());
  std::size_t i = 0;
  for (const auto& [value, mult] : expected) {
    CHECK(std::abs(s.clusters[i].value - value) <= tol);
    CHECK(s.clusters[i].multiplicity == mult);
    ++i;
  }
}

const double kGrid[] = {0.0, kPi / 8, kPi / 4, 3 * kPi / 8, kHalfPi};

}  // namespace

TEST_CASE("frame construction") {
  SUBCASE("theta = 0 gives T = A0") {
    const auto f = build_hypersurface(2, 0.0);
    CHECK(f.dim() == 3);
    CHECK(f.T == f.ambient.A0());
    CHECK(f.xi == f.ambient.X(1));
    CHECK(f.tangent_basis.col(1) == f.ambient.Y(1));
    CHECK(f.tangent_basis.col(2) == f.ambient.Z0());
  }
  SUBCASE("theta = pi/2 gives T = -X1 and the Heisenberg algebra") {
    const auto f = build_hypersurface(2, kHalfPi);
    CHECK(f.is_horosphere());
    CHECK(f.cos_theta == 0.0);
    CHECK(f.sin_theta == 1.0);
    CHECK(f.T == -f.ambient.X(1));
    CHECK(lower_central_series(f.sub) == std::vector<Index>{3, 1, 0});
  }
  SUBCASE("v0 for n = 3") {
    const auto f = build_hypersurface(3, 0.4);
    CHECK(f.dim() == 5);
    CHECK(f.v0_size() == 2);
    CHECK(f.tangent_basis.col(f.v0_begin()) == f.ambient.X(2));
    CHECK(f.tangent_basis.col(f.v0_begin() + 1) == f.ambient.Y(2));
    CHECK(f.tangent_basis.col(f.z_index()) == f.ambient.Z0());
    CHECK(validate(f.sub).empty());
    CHECK((f.tangent_basis.transpose() * f.xi).isZero(1e-15));
  }
}

TEST_CASE("frame errors") {
  CHECK_THROWS_AS(build_hypersurface(1, 0.0), InvalidDimension);
  CHECK_THROWS_AS(build_hypersurface(2, -0.1), InvalidTheta);
  CHECK_THROWS_AS(build_hypersurface(2, 1.6), InvalidTheta);
  CHECK_THROWS_AS(build_hypersurface(2, std::nan("")), InvalidTheta);
  const auto f = build_hypersurface(2, 0.3);
  CHECK_THROWS_AS(to_tangent(f, f.xi), NotTangent);
}

TEST_CASE("tangent coordinates round trip") {
  const auto f = build_hypersurface(3, 0.9);
  Vector c(5);
  c << 0.1, -0.2, 0.3, 0.4, -0.5;
  CHECK(max_abs(to_tangent(f, to_ambient(f, c)) - c) < 1e-15);
  const auto d = decompose(f, to_ambient(f, c));
  CHECK(d.a1 == doctest::Approx(0.1));
  CHECK(d.a2 == doctest::Approx(-0.2));
  CHECK(d.a3 == doctest::Approx(-0.5));
  CHECK(max_abs(d.v - (0.3 * f.ambient.X(2) + 0.4 * f.ambient.Y(2))) < 1e-15);
}

TEST_CASE("second fundamental form") {
  for (double th : kGrid) {
    const auto f = build_hypersurface(3, th);
    const auto& m = f.ambient;
    CHECK(second_fundamental_form(f, f.T, f.T) == doctest::Approx(0.5 * std::sin(th)));
    CHECK(second_fundamental_form(f, m.Y(1), m.Z0()) == doctest::Approx(0.5 * f.cos_theta));
    CHECK(second_fundamental_form(f, m.Z0(), m.Z0()) == doctest::Approx(std::sin(th)));
    // h(x, y) = <nabla_x y, xi> from the oracle
    CHECK(second_fundamental_form(f, m.Y(1), m.Z0()) ==
          doctest::Approx(levi_civita(m.alg, m.Y(1), m.Z0()).dot(f.xi)));
  }
}

TEST_CASE("shape operator") {
  SUBCASE("theta = 0: A Y1 = Z0 / 2") {
    const auto f = build_hypersurface(2, 0.0);
    const Matrix a = shape_operator(f);
    CHECK(max_abs(Vector(a.col(f.y1_index()) - 0.5 * Vector::Unit(3, f.z_index()))) < 1e-15);
  }
  SUBCASE("theta = pi/2: A Z0 = Z0, A Y1 = Y1 / 2") {
    const auto f = build_hypersurface(3, kHalfPi);
    const Matrix a = shape_operator(f);
    Matrix expected = Matrix::Identity(5, 5) * 0.5;
    expected(4, 4) = 1.0;
    CHECK(max_abs(Matrix(a - expected)) < 1e-15);
  }
  SUBCASE("A X2 = sin(theta) X2 / 2") {
    for (double th : kGrid) {
      const auto f = build_hypersurface(4, th);
      const Matrix a = shape_operator(f);
      const Vector e = Vector::Unit(7, f.v0_begin());
      CHECK(max_abs(Vector(a * e - 0.5 * std::sin(th) * e)) < 1e-15);
    }
  }
  SUBCASE("h-derived and entry-wise forms agree and are symmetric") {
    for (int n : {2, 3, 4})
      for (double th : kGrid) {
        const auto f = build_hypersurface(n, th);
        const Matrix a = shape_operator(f);
        CHECK(max_abs(Matrix(a - shape_operator_closed(f))) <= 1e-12);
        CHECK(max_abs(Matrix(a - a.transpose())) == 0.0);
      }
  }
}

TEST_CASE("principal curvatures") {
  check_clusters(principal_curvatures(build_hypersurface(3, 0.0)), {{-0.5, 1}, {0.0, 3}, {0.5, 1}});
  // at pi/2 the top curvature is 3/4 + 1/4 = 1
  check_clusters(principal_curvatures(build_hypersurface(3, kHalfPi)), {{0.5, 4}, {1.0, 1}});
  check_clusters(principal_curvatures_closed(build_hypersurface(3, kHalfPi)), {{0.5, 4}, {1.0, 1}});

  const auto l = principal_curvature_values(kPi / 6);
  const double r13 = std::sqrt(13.0);
  CHECK(l[0] == doctest::Approx(0.375 - r13 / 8).epsilon(1e-14));
  CHECK(l[1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(l[2] == doctest::Approx(0.375 + r13 / 8).epsilon(1e-14));
  CHECK(l[0] == doctest::Approx(-0.075694).epsilon(1e-5));
  CHECK(l[2] == doctest::Approx(0.825694).epsilon(1e-6));

  for (int n : {2, 3, 4})
    for (double th : kGrid) {
      const auto f = build_hypersurface(n, th);
      const auto num = principal_curvatures(f);
      const auto closed = principal_curvatures_closed(f);
      REQUIRE(num.clusters.size() == closed.clusters.size());
      for (std::size_t i = 0; i < num.clusters.size(); ++i) {
        CHECK(std::abs(num.clusters[i].value - closed.clusters[i].value) < 1e-12);
        CHECK(num.clusters[i].multiplicity == closed.clusters[i].multiplicity);
      }
    }
}

TEST_CASE("clustering near pi/2 depends on the tolerance") {
  // lambda1 - lambda2 is about -cos^2(theta) / 2 here
  const auto f = build_hypersurface(2, kHalfPi - 1e-2);
  CHECK(principal_curvatures(f, 1e-6).clusters.size() == 3);
  CHECK(principal_curvatures(f, 1e-3).clusters.size() == 2);
  CHECK(principal_curvatures_closed(f).clusters.size() == 3);
}

TEST_CASE("mean curvature") {
  CHECK(mean_curvature(build_hypersurface(3, 0.0)) == doctest::Approx(0.0));
  CHECK(mean_curvature(build_hypersurface(2, kHalfPi)) == doctest::Approx(2.0 / 3));
  CHECK(mean_curvature(build_hypersurface(3, kPi / 6)) == doctest::Approx(0.3));
  for (int n : {2, 3, 4})
    for (double th : kGrid)
      CHECK(std::abs(mean_curvature(build_hypersurface(n, th)) - mean_curvature_closed(n, th)) <= 1e-12);
}

TEST_CASE("extrinsic flags") {
  const auto f0 = classify_extrinsic(build_hypersurface(3, 0.0));
  CHECK(f0.minimal);
  CHECK(f0.austere);
  CHECK_FALSE(f0.hopf);
  CHECK(f0.hopf_off_norm == doctest::Approx(0.5));

  const auto f1 = classify_extrinsic(build_hypersurface(3, kHalfPi));
  CHECK_FALSE(f1.minimal);
  CHECK_FALSE(f1.austere);
  CHECK(f1.hopf);
  CHECK(f1.hopf_off_norm == 0.0);

  const auto f2 = classify_extrinsic(build_hypersurface(3, kPi / 4));
  CHECK_FALSE(f2.minimal);
  CHECK_FALSE(f2.austere);
  CHECK_FALSE(f2.hopf);
  CHECK(std::abs(f2.hopf_off_norm - 0.5 * std::pow(std::cos(kPi / 4), 3)) <= 1e-12);
}

TEST_CASE("induced connection") {
  for (double th : kGrid) {
    const auto f = build_hypersurface(3, th);
    const auto& m = f.ambient;
    CHECK(max_abs(induced_connection(f, f.T, f.T)) < 1e-15);
    CHECK(max_abs(induced_connection(f, m.X(2), m.Z0()) + 0.5 * m.J * m.X(2)) < 1e-15);
    CHECK(max_abs(induced_connection(f, m.Z0(), m.Z0()) - f.cos_theta * f.T) < 1e-15);
    // agrees with the Levi-Civita connection of s(theta) itself
    const Index y1 = f.y1_index(), z = f.z_index();
    const Vector intrinsic = levi_civita(f.sub, f.sub.basis_vector(y1), f.sub.basis_vector(z));
    CHECK(max_abs(to_tangent(f, induced_connection(f, m.Y(1), m.Z0())) - intrinsic) < 1e-14);
  }
}

TEST_CASE("intrinsic Ricci operator") {
  for (int n : {2, 3, 4}) {
    const auto f = build_hypersurface(n, kHalfPi);
    const Matrix ric = intrinsic_ricci(f);
    CHECK(ric(f.t_index(), f.t_index()) == doctest::Approx(-0.5));
    CHECK(ric(f.z_index(), f.z_index()) == doctest::Approx(0.5 * (n - 1)));
  }
  const auto f = build_hypersurface(2, 0.0);
  const Matrix ric = intrinsic_ricci(f);
  CHECK(ric(f.y1_index(), f.z_index()) == 0.0);
  CHECK(ric(f.y1_index(), f.y1_index()) == doctest::Approx(-0.75));

  for (int n : {2, 3, 4})
    for (double th : kGrid) {
      const auto g = build_hypersurface(n, th);
      CHECK(max_abs(Matrix(ricci_matrix(g.sub) - intrinsic_ricci(g))) <= 1e-9);
    }
}

TEST_CASE("principal Ricci curvatures") {
  for (int n : {2, 3, 4}) {
    check_clusters(principal_ricci(build_hypersurface(n, kHalfPi)), {{-0.5, 2 * n - 2}, {0.5 * (n - 1), 1}}, 1e-9);
    check_clusters(principal_ricci_closed(build_hypersurface(n, kHalfPi)), {{-0.5, 2 * n - 2}, {0.5 * (n - 1), 1}});
  }
  const auto a = principal_ricci_values(2, 0.0);
  CHECK(a[0] == doctest::Approx(-1.5));
  CHECK(a[1] == doctest::Approx(-1.25));
  CHECK(a[2] == doctest::Approx(-0.75));
  CHECK(a[0] + a[1] + a[2] == doctest::Approx(-3.5));

  for (int n : {2, 3, 4})
    for (double th : kGrid) {
      const auto v = principal_ricci_values(n, th);
      if (th < kHalfPi) {
        CHECK(v[0] < v[1]);
        CHECK(v[1] < v[2]);
      } else {
        CHECK(v[0] == v[1]);
      }
      const auto s = principal_ricci(build_hypersurface(n, th));
      CHECK(std::abs(s.eigenvalues.front() - v[0]) <= 1e-9);
      CHECK(std::abs(s.eigenvalues.back() - v[2]) <= 1e-9);
    }
}

TEST_CASE("scalar curvature") {
  CHECK(intrinsic_scalar(build_hypersurface(2, 0.0)) == doctest::Approx(-3.5));
  CHECK(intrinsic_scalar(build_hypersurface(3, 0.0)) == doctest::Approx(-8.5));
  for (int n : {2, 3, 4})
    for (double th : kGrid) {
      const auto f = build_hypersurface(n, th);
      const double closed = intrinsic_scalar(f);
      if (th == kHalfPi) CHECK(closed == -0.5 * (n - 1));
      CHECK(closed < 0.0);
      CHECK(std::abs(scalar_curvature(f.sub) - closed) <= 1e-12);
      CHECK(intrinsic_ricci(f).trace() == doctest::Approx(closed).epsilon(1e-14));
    }
}

TEST_CASE("intrinsic sectional curvature examples") {
  for (double th : kGrid) {
    const auto f = build_hypersurface(3, th);
    const auto& m = f.ambient;
    const double s2 = f.sin_theta * f.sin_theta, c2 = f.cos_theta * f.cos_theta;
    CHECK(intrinsic_sectional(f, {f.T, m.X(2)}) == doctest::Approx(-0.25 + 0.25 * s2));
    CHECK(intrinsic_sectional(f, {m.Y(1), m.Z0()}) == doctest::Approx(-0.25 + 0.5 * s2 - 0.25 * c2));
  }
  const auto h = build_hypersurface(2, kHalfPi);
  CHECK(intrinsic_sectional(h, {h.ambient.Y(1), h.ambient.Z0()}) == doctest::Approx(0.25));
  CHECK(intrinsic_sectional(h, {h.T, h.ambient.Y(1)}) == doctest::Approx(-0.75));
}

TEST_CASE("three routes to the sectional curvature agree") {
  for (int n : {2, 3, 4})
    for (double th : kGrid) {
      const auto f = build_hypersurface(n, th);
      NormalStream rng(static_cast<std::uint64_t>(n * 1000) + static_cast<std::uint64_t>(th * 1e6));
      for (int s = 0; s < 25; ++s) {
        const Plane p = to_ambient(f, random_plane(f.dim(), rng));
        const double a = intrinsic_sectional(f, p), b = gauss_sectional(f, p), c = oracle_sectional(f, p);
        CHECK(std::abs(a - b) <= 1e-9);
        CHECK(std::abs(a - c) <= 1e-9);
      }
    }
  const auto f = build_hypersurface(2, 0.2);
  CHECK_THROWS_AS(intrinsic_sectional(f, {f.xi, f.T}), NotTangent);
}

TEST_CASE("closed-form extrema") {
  const auto a = sectional_extrema_closed(build_hypersurface(2, 0.0));
  CHECK(a.max_closed == doctest::Approx(-0.25));
  REQUIRE(a.min_closed);
  CHECK(*a.min_closed == doctest::Approx(-1.0));
  CHECK(a.D == doctest::Approx(3.0));

  const auto b = sectional_extrema_closed(build_hypersurface(2, kHalfPi));
  CHECK(b.max_closed == doctest::Approx(0.25));
  CHECK(*b.min_closed == doctest::Approx(-0.75));
  CHECK(b.D == doctest::Approx(4.0));

  const auto c = sectional_extrema_closed(build_hypersurface(4, 0.0));
  CHECK(c.max_closed == doctest::Approx(-0.25));
  CHECK_FALSE(c.min_closed);
}

TEST_CASE("searched extrema") {
  SearchConfig cfg;
  cfg.restarts = 16;
  const auto e = sectional_extrema(build_hypersurface(2, kHalfPi), cfg);
  CHECK(std::abs(e.max_search - 0.25) <= 1e-6);
  CHECK(std::abs(e.min_search + 0.75) <= 1e-6);
  const auto f = build_hypersurface(2, kHalfPi);
  CHECK(intrinsic_sectional(f, e.argmax) == doctest::Approx(e.max_search).epsilon(1e-9));

  const auto g = sectional_extrema(build_hypersurface(3, 0.0), cfg);
  CHECK(std::abs(g.max_search + 0.25) <= 1e-6);
}

TEST_CASE("comparison of the n = 2 and n > 2 maxima") {
  CHECK(compare_extrema(0.0).max_gap == 0.0);
  CHECK(compare_extrema(kHalfPi).max_gap == 0.0);
  const auto mid = compare_extrema(kPi / 4);
  CHECK(mid.max_gap > 0.0);
  CHECK(mid.max_gap == doctest::Approx((mid.C - mid.D) / 8).epsilon(1e-12));
  for (double th : kGrid) {
    const double gap = sectional_extrema_closed(build_hypersurface(3, th)).max_closed -
                       sectional_extrema_closed(build_hypersurface(2, th)).max_closed;
    CHECK(std::abs(gap - compare_extrema(th).max_gap) <= 1e-14);
  }
}
