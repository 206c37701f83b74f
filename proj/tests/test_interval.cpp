#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "matmom/circle.hpp"
#include "matmom/interval.hpp"
#include "matmom/measure.hpp"
#include "scalar_oracles.hpp"
#include "test_support.hpp"

using namespace matmom;

namespace {

IntervalMomentVector scalar_moments(std::initializer_list<double> values) {
  IntervalMomentVector s{1, {}};
  for (double v : values) s.moments.push_back(HermitianMatrix{Mat::Constant(1, 1, v)});
  return s;
}

IntervalCanonicalVector scalar_canonical(std::initializer_list<double> values) {
  IntervalCanonicalVector u{1, {}};
  for (double v : values) u.canon.push_back(HermitianMatrix{Mat::Constant(1, 1, v)});
  return u;
}

// Scalar sequence embedded as s_j * I_p.
IntervalMomentVector embed_scalar(const IntervalMomentVector& s, int p) {
  IntervalMomentVector out{p, {}};
  for (const auto& m : s.moments) {
    out.moments.push_back(HermitianMatrix{Mat(m.mat()(0, 0).real() * Mat::Identity(p, p))});
  }
  return out;
}

// Quadrature oracle for arcsine moments: exact for polynomials.
double arcsine_moment(int j) {
  auto [nodes, weights] = arcsine_grid(64);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * std::pow(nodes[i], j);
  return sum;
}

// Interior canonical vectors; the eigenvalue spread narrows with depth the
// way uniform draws from the moment space do, keeping the associated
// moment-range widths above the double-precision cancellation floor.
IntervalCanonicalVector random_interior_canonical(int p, int n, std::mt19937_64& rng) {
  IntervalCanonicalVector u{p, {}};
  for (int k = 0; k < n; ++k) {
    double spread = (n > 8) ? 0.22 : 0.35;
    u.canon.push_back(
        HermitianMatrix{test::random_hermitian_in(p, rng, 0.5 - spread, 0.5 + spread)});
  }
  return u;
}

}  // namespace

TEST_CASE("hankel_pair matches the displayed assembly") {
  SUBCASE("n = 2 scalar") {
    auto [lo, hi] = hankel_pair(scalar_moments({0.5, 1.0 / 3.0}));
    Mat expected_lo(2, 2);
    expected_lo << 1.0, 0.5, 0.5, 1.0 / 3.0;
    CHECK((lo.mat() - expected_lo).norm() < 1e-15);
    REQUIRE(hi.mat().rows() == 1);
    CHECK(hi.mat()(0, 0).real() == doctest::Approx(1.0 / 6.0));
  }
  SUBCASE("n = 1 scalar") {
    auto [lo, hi] = hankel_pair(scalar_moments({0.5}));
    CHECK(lo.mat()(0, 0).real() == doctest::Approx(0.5));
    CHECK(hi.mat()(0, 0).real() == doctest::Approx(0.5));
  }
  SUBCASE("scalar embedding gives Hankel tensor identity") {
    auto s1 = scalar_moments({0.5, 1.0 / 3.0, 0.25});
    auto s2 = embed_scalar(s1, 2);
    auto [lo1, hi1] = hankel_pair(s1);
    auto [lo2, hi2] = hankel_pair(s2);
    for (int i = 0; i < lo1.mat().rows(); ++i)
      for (int j = 0; j < lo1.mat().cols(); ++j) {
        Mat block = lo2.mat().block(2 * i, 2 * j, 2, 2);
        CHECK((block - lo1.mat()(i, j) * Mat::Identity(2, 2)).norm() < 1e-15);
      }
    CHECK(hi2.mat().rows() == 2 * hi1.mat().rows());
  }
}

TEST_CASE("interiority of interval moment vectors") {
  CHECK(is_interior_interval(scalar_moments({0.5, 1.0 / 3.0})));
  CHECK_FALSE(is_interior_interval(scalar_moments({1.0, 1.0})));  // point mass at 1
  IntervalMomentVector s{2, {}};
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 1.0;
  s.moments.push_back(HermitianMatrix(m));
  CHECK_FALSE(is_interior_interval(s));  // S_1 < I fails
}

TEST_CASE("moment_range values") {
  SUBCASE("empty prefix") {
    MomentRange r = moment_range(IntervalMomentVector{3, {}});
    CHECK(r.lower.mat().norm() == doctest::Approx(0.0));
    CHECK((r.upper.mat() - Mat::Identity(3, 3)).norm() < 1e-15);
  }
  SUBCASE("one scalar moment") {
    MomentRange r = moment_range(scalar_moments({0.5}));
    CHECK(r.lower.mat()(0, 0).real() == doctest::Approx(0.25));
    CHECK(r.upper.mat()(0, 0).real() == doctest::Approx(0.5));
  }
  SUBCASE("two scalar moments: width matches the determinant identity") {
    MomentRange r = moment_range(scalar_moments({0.5, 1.0 / 3.0}));
    double width = (r.upper.mat() - r.lower.mat())(0, 0).real();
    // brute-force values: S^-_3 = 2/9, S^+_3 = 5/18
    CHECK(r.lower.mat()(0, 0).real() == doctest::Approx(2.0 / 9.0));
    CHECK(r.upper.mat()(0, 0).real() == doctest::Approx(5.0 / 18.0));
    CHECK(width == doctest::Approx(range_det_identity(scalar_canonical({0.5, 1.0 / 3.0}))));
    CHECK(width == doctest::Approx(1.0 / 18.0));
  }
}

TEST_CASE("to_canonical_interval on named laws") {
  SUBCASE("arcsine prefix") {
    auto u = to_canonical_interval(scalar_moments({0.5, 0.375}));
    CHECK(u.canon[0].mat()(0, 0).real() == doctest::Approx(0.5));
    CHECK(u.canon[1].mat()(0, 0).real() == doctest::Approx(0.5));
  }
  SUBCASE("uniform prefix") {
    auto u = to_canonical_interval(scalar_moments({0.5, 1.0 / 3.0}));
    CHECK(u.canon[0].mat()(0, 0).real() == doctest::Approx(0.5));
    CHECK(u.canon[1].mat()(0, 0).real() == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("scalar embedding commutes with the transform") {
    auto s = scalar_moments({0.5, 1.0 / 3.0, 0.25, 0.2});
    auto u1 = to_canonical_interval(s);
    auto u2 = to_canonical_interval(embed_scalar(s, 3));
    for (int k = 0; k < 4; ++k) {
      Mat expected = u1.canon[k].mat()(0, 0).real() * Mat::Identity(3, 3);
      CHECK((u2.canon[k].mat() - expected).norm() < 1e-12);
    }
  }
  SUBCASE("boundary input rejected") {
    CHECK_THROWS_AS(to_canonical_interval(scalar_moments({1.0, 1.0})), NotInterior);
  }
}

TEST_CASE("from_canonical_interval and the round trip") {
  SUBCASE("constant I/2 gives arcsine moments") {
    IntervalCanonicalVector u{2, {}};
    for (int k = 0; k < 6; ++k) {
      u.canon.push_back(HermitianMatrix{Mat(0.5 * Mat::Identity(2, 2))});
    }
    auto s = from_canonical_interval(u);
    for (int j = 1; j <= 6; ++j) {
      Mat expected = arcsine_moment(j) * Mat::Identity(2, 2);
      CHECK((s.moments[j - 1].mat() - expected).norm() < 1e-12);
    }
    // first few arcsine moments: 1/2, 3/8, 5/16
    CHECK(s.moments[1].mat()(0, 0).real() == doctest::Approx(0.375));
    CHECK(s.moments[2].mat()(0, 0).real() == doctest::Approx(0.3125));
  }
  SUBCASE("inverse of the uniform example") {
    auto s = from_canonical_interval(scalar_canonical({0.5, 1.0 / 3.0}));
    CHECK(s.moments[0].mat()(0, 0).real() == doctest::Approx(0.5));
    CHECK(s.moments[1].mat()(0, 0).real() == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("round trip on random interior points") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 120; ++trial) {
      int p = 1 + static_cast<int>(rng() % 3);
      int n = 2 + static_cast<int>(rng() % 11);
      auto u = random_interior_canonical(p, n, rng);
      auto s = from_canonical_interval(u);
      auto u_back = to_canonical_interval(s);
      double err = 0.0;
      for (int k = 0; k < n; ++k) err += (u.canon[k].mat() - u_back.canon[k].mat()).norm();
      CHECK(err < 1e-9);
      auto s_back = from_canonical_interval(u_back);
      double err_s = 0.0;
      for (int k = 0; k < n; ++k) err_s += (s.moments[k].mat() - s_back.moments[k].mat()).norm();
      CHECK(err_s < 1e-9);
    }
  }
  SUBCASE("boundary canonical rejected") {
    CHECK_THROWS_AS(from_canonical_interval(scalar_canonical({1.0})), NotInInterior);
  }
}

TEST_CASE("range determinant identity") {
  CHECK(range_det_identity(scalar_canonical({0.5})) == doctest::Approx(0.25));
  IntervalCanonicalVector u{2, {}};
  u.canon.push_back(HermitianMatrix{Mat(0.5 * Mat::Identity(2, 2))});
  u.canon.push_back(HermitianMatrix{Mat(0.5 * Mat::Identity(2, 2))});
  CHECK(range_det_identity(u) == doctest::Approx(1.0 / 256.0));

  // random corpus: product formula vs direct range width
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    int p = 1 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 6);
    auto ucan = random_interior_canonical(p, n, rng);
    auto s = from_canonical_interval(ucan);
    MomentRange r = moment_range(s);
    Mat width = r.upper.mat() - r.lower.mat();
    double direct = 1.0;
    RealVec ev = hermitian_eigenvalues(width);
    for (int i = 0; i < p; ++i) direct *= ev(i);
    double via_canon = range_det_identity(ucan);
    CHECK(std::abs(via_canon - direct) <= 1e-10 * std::abs(direct));
  }
}

TEST_CASE("moments_of_measure") {
  SUBCASE("point mass at one") {
    DiscreteMatrixMeasure mu{2, {{1.0, PsdMatrix::identity(2)}}};
    auto s = moments_of_measure(mu, 4);
    for (int j = 0; j < 4; ++j) CHECK((s.moments[j].mat() - Mat::Identity(2, 2)).norm() < 1e-15);
  }
  SUBCASE("two half atoms at the endpoints") {
    DiscreteMatrixMeasure mu{1, {}};
    mu.atoms.push_back({0.0, PsdMatrix{Mat::Constant(1, 1, 0.5)}});
    mu.atoms.push_back({1.0, PsdMatrix{Mat::Constant(1, 1, 0.5)}});
    auto s = moments_of_measure(mu, 3);
    for (int j = 0; j < 3; ++j) CHECK(s.moments[j].mat()(0, 0).real() == doctest::Approx(0.5));
  }
  SUBCASE("uniform density grid") {
    auto mu = interval_density_measure(1, 512, [](double) { return 1.0; }).normalized_copy();
    auto s = moments_of_measure(mu, 6);
    for (int j = 1; j <= 6; ++j) {
      CHECK(s.moments[j - 1].mat()(0, 0).real() == doctest::Approx(1.0 / (j + 1)).epsilon(1e-4));
    }
  }
  SUBCASE("unnormalized input rejected") {
    DiscreteMatrixMeasure mu{1, {{0.5, PsdMatrix{Mat::Constant(1, 1, 0.25)}}}};
    CHECK_THROWS_AS(moments_of_measure(mu, 2), NotNormalized);
  }
}

TEST_CASE("rate_canonical_interval") {
  SUBCASE("minimum at the arcsine point") {
    IntervalCanonicalVector u{3, {}};
    for (int k = 0; k < 5; ++k) u.canon.push_back(HermitianMatrix{Mat(0.5 * Mat::Identity(3, 3))});
    CHECK(rate_canonical_interval(u) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("scalar value at 1/4") {
    CHECK(rate_canonical_interval(scalar_canonical({0.25})) ==
          doctest::Approx(std::log(4.0 / 3.0)));
  }
  SUBCASE("boundary gives infinity") {
    CHECK(rate_canonical_interval(scalar_canonical({1.0})) ==
          std::numeric_limits<double>::infinity());
    Mat edge = Mat::Zero(2, 2);
    edge(0, 0) = 0.5;  // eigenvalue 0 on the second direction
    IntervalCanonicalVector u{2, {HermitianMatrix(edge)}};
    CHECK(rate_canonical_interval(u) == std::numeric_limits<double>::infinity());
  }
}

TEST_CASE("rate_moments_interval") {
  CHECK(rate_moments_interval(scalar_moments({0.5})) == doctest::Approx(0.0));
  CHECK(rate_moments_interval(scalar_moments({0.25})) == doctest::Approx(std::log(4.0 / 3.0)));
  CHECK(rate_moments_interval(scalar_moments({1.0, 1.0})) ==
        std::numeric_limits<double>::infinity());

  SUBCASE("agrees with the canonical rate along random interior points") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      int p = 1 + static_cast<int>(rng() % 3);
      int n = 1 + static_cast<int>(rng() % 6);
      auto u = random_interior_canonical(p, n, rng);
      auto s = from_canonical_interval(u);
      CHECK(rate_moments_interval(s) ==
            doctest::Approx(rate_canonical_interval(u)).epsilon(1e-8));
    }
  }
  SUBCASE("partial rates are non-decreasing in k") {
    std::mt19937_64 rng(24);
    auto u = random_interior_canonical(2, 8, rng);
    auto s = from_canonical_interval(u);
    double prev = 0.0;
    for (int k = 1; k <= 8; ++k) {
      IntervalMomentVector prefix{2, {s.moments.begin(), s.moments.begin() + k}};
      double rate = rate_moments_interval(prefix);
      CHECK(rate >= prev - 1e-10);
      prev = rate;
    }
  }
}

TEST_CASE("rate_measure_interval") {
  SUBCASE("arcsine measure itself") {
    auto [nodes, weights] = arcsine_grid(128);
    DensityGridMeasure mu{2, nodes, {}, weights, std::nullopt};
    for (std::size_t i = 0; i < nodes.size(); ++i) mu.values.push_back(PsdMatrix::identity(2));
    CHECK(rate_measure_interval(mu) == doctest::Approx(0.0));
  }
  SUBCASE("uniform measure tends to log(4/pi)") {
    auto mu = interval_density_measure(1, 4096, [](double) { return 1.0; });
    CHECK(rate_measure_interval(mu) ==
          doctest::Approx(std::log(4.0 / std::numbers::pi)).epsilon(2e-4));
  }
  SUBCASE("vanishing determinant gives infinity") {
    auto [nodes, weights] = arcsine_grid(16);
    DensityGridMeasure mu{1, nodes, {}, weights, std::nullopt};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      mu.values.push_back(PsdMatrix{Mat::Constant(1, 1, i < 8 ? 0.0 : 2.0)});
    }
    CHECK(rate_measure_interval(mu) == std::numeric_limits<double>::infinity());
  }
  SUBCASE("too few nodes") {
    auto [nodes, weights] = arcsine_grid(4);
    DensityGridMeasure mu{1, nodes, {}, weights, std::nullopt};
    for (int i = 0; i < 4; ++i) mu.values.push_back(PsdMatrix::identity(1));
    CHECK_THROWS_AS(rate_measure_interval(mu), GridTooCoarse);
  }
}

TEST_CASE("interval-circle bridge") {
  auto u = scalar_canonical({0.75});
  auto a = interval_circle_bridge(u);
  CHECK(a.canon[0](0, 0).real() == doctest::Approx(0.5));

  IntervalCanonicalVector half{2, {HermitianMatrix{Mat(0.5 * Mat::Identity(2, 2))}}};
  CHECK(interval_circle_bridge(half).canon[0].norm() < 1e-15);

  SUBCASE("det transport identity on random inputs") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 40; ++trial) {
      int p = 1 + static_cast<int>(rng() % 3);
      auto u2 = random_interior_canonical(p, 1, rng);
      auto a2 = interval_circle_bridge(u2);
      double lhs = range_det_identity(u2);
      RealVec ev = hermitian_eigenvalues(a2.canon[0]);
      double det_defect = 1.0;
      for (int i = 0; i < p; ++i) det_defect *= 1.0 - ev(i) * ev(i);
      CHECK(lhs == doctest::Approx(std::pow(4.0, -p) * det_defect).epsilon(1e-10));
      // and back
      auto u_back = circle_interval_bridge(a2);
      CHECK((u_back.canon[0].mat() - u2.canon[0].mat()).norm() < 1e-14);
    }
  }
}

TEST_CASE("scalar reduction agrees with the Hankel determinant oracle") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto u = random_interior_canonical(1, n, rng);
    auto s = from_canonical_interval(u);
    std::vector<double> scalar;
    for (const auto& m : s.moments) scalar.push_back(m.mat()(0, 0).real());
    auto oracle = matmom::test::scalar_canonical_oracle(scalar);
    auto lib = to_canonical_interval(s);
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(lib.canon[k].mat()(0, 0).real() - oracle[k]) < 1e-10);
    }
  }
}
