#include <doctest.h>

#include <random>

#include "matmom/matrix.hpp"
#include "test_support.hpp"

using namespace matmom;

TEST_CASE("hermitian construction symmetrizes") {
  Mat m(2, 2);
  m << Cplx(1.0, 0.5), Cplx(2.0, 1.0), Cplx(0.0, 0.0), Cplx(3.0, -0.25);
  HermitianMatrix h(m);
  CHECK(h.mat()(0, 0).imag() == 0.0);
  CHECK(h.mat()(1, 1).imag() == 0.0);
  CHECK(h.mat()(0, 1) == std::conj(h.mat()(1, 0)));
}

TEST_CASE("hermitian_sqrt on identity and diagonal") {
  PsdMatrix eye = PsdMatrix::identity(2);
  CHECK((hermitian_sqrt(eye).mat() - Mat::Identity(2, 2)).norm() < 1e-14);

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  Mat root = hermitian_sqrt(PsdMatrix(d)).mat();
  CHECK(std::abs(root(0, 0).real() - 2.0) < 1e-14);
  CHECK(std::abs(root(1, 1).real() - 1.0) < 1e-14);
}

TEST_CASE("hermitian_sqrt squares back on random PSD") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int p = 1 + static_cast<int>(rng() % 4);
    Mat c = test::random_complex(p, rng);
    PsdMatrix a{hermitize(c * c.adjoint())};
    Mat root = hermitian_sqrt(a).mat();
    CHECK((root * root - a.mat()).norm() <= 1e-10 * std::max(a.mat().norm(), 1.0));
    // sqrt(A) commutes with A
    CHECK((root * a.mat() - a.mat() * root).norm() <= 1e-9 * std::max(a.mat().norm(), 1.0));
  }
}

TEST_CASE("inv_sqrt inverts the square root") {
  CHECK((inv_sqrt(PsdMatrix::identity(3)).mat() - Mat::Identity(3, 3)).norm() < 1e-14);

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  Mat m = inv_sqrt(PsdMatrix(d)).mat();
  CHECK(std::abs(m(0, 0).real() - 0.5) < 1e-14);
  CHECK(std::abs(m(1, 1).real() - 1.0) < 1e-14);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    int p = 1 + static_cast<int>(rng() % 4);
    PsdMatrix a{test::random_pd(p, rng)};
    Mat prod = inv_sqrt(a).mat() * hermitian_sqrt(a).mat();
    CHECK((prod - Mat::Identity(p, p)).norm() < 1e-9);
    Mat sandwich = inv_sqrt(a).mat() * a.mat() * inv_sqrt(a).mat();
    CHECK((sandwich - Mat::Identity(p, p)).norm() < 1e-9);
  }
}

TEST_CASE("inv_sqrt rejects singular input") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 1.0;
  CHECK_THROWS_AS(inv_sqrt(PsdMatrix(d)), Singular);
}

TEST_CASE("PsdMatrix rejects indefinite input") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -0.5;
  CHECK_THROWS_AS(PsdMatrix{d}, NotPsd);
}

TEST_CASE("loewner_compare classifications") {
  HermitianMatrix zero = HermitianMatrix::zero(2);
  HermitianMatrix eye = HermitianMatrix::identity(2);
  CHECK(loewner_compare(zero, eye) == LoewnerOrder::LessStrict);
  CHECK(loewner_compare(eye, eye) == LoewnerOrder::LessEq);

  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  Mat b = Mat::Zero(2, 2);
  b(1, 1) = 1.0;
  CHECK(loewner_compare(HermitianMatrix(a), HermitianMatrix(b)) == LoewnerOrder::Incomparable);

  CHECK_THROWS_AS(loewner_compare(HermitianMatrix::zero(2), HermitianMatrix::zero(3)),
                  DimensionMismatch);
}

TEST_CASE("loewner strictness survives an epsilon bump") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 1 + static_cast<int>(rng() % 3);
    Mat a = test::random_hermitian(p, rng);
    Mat gap = test::random_pd(p, rng, 0.5);
    HermitianMatrix b{a + gap};
    REQUIRE(loewner_compare(HermitianMatrix(a), b) == LoewnerOrder::LessStrict);
    double min_eig = hermitian_eigenvalues(gap)(0);
    HermitianMatrix bumped{a + 0.5 * min_eig * Mat::Identity(p, p)};
    CHECK(loewner_compare(bumped, b) == LoewnerOrder::LessStrict);
  }
}

TEST_CASE("log_det basics and Cholesky oracle") {
  CHECK(log_det(PsdMatrix::identity(4)) == doctest::Approx(0.0));

  Mat d = Mat::Zero(2, 2);
  double e = std::exp(1.0);
  d(0, 0) = e;
  d(1, 1) = e;
  CHECK(log_det(PsdMatrix(d)) == doctest::Approx(2.0));

  // A = L L^* with known triangular L: log det = 2 sum log L_ii.
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 2 + static_cast<int>(rng() % 3);
    std::uniform_real_distribution<double> u(0.3, 2.0);
    std::normal_distribution<double> normal;
    Mat l = Mat::Zero(p, p);
    double expected = 0.0;
    for (int i = 0; i < p; ++i) {
      double dii = u(rng);
      l(i, i) = dii;
      expected += 2.0 * std::log(dii);
      for (int j = 0; j < i; ++j) l(i, j) = Cplx(normal(rng), normal(rng)) * 0.3;
    }
    CHECK(log_det(PsdMatrix{hermitize(l * l.adjoint())}) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("log_det is additive on commuting PD pairs") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 2 + static_cast<int>(rng() % 3);
    Mat a = test::random_pd(p, rng, 0.4);
    // B = polynomial of A, commutes with A and is PD for positive coeffs.
    Mat b = 0.5 * Mat::Identity(p, p) + 0.25 * a + 0.125 * a * a;
    Mat ab = hermitize(a * b);
    double lhs = log_det(PsdMatrix(ab));
    double rhs = log_det(PsdMatrix(a)) + log_det(PsdMatrix{hermitize(b)});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("frobenius norm values") {
  CHECK(frobenius_norm(Mat::Identity(4, 4)) == doctest::Approx(2.0));
  CHECK(frobenius_norm(Mat::Zero(3, 3)) == doctest::Approx(0.0));
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = Cplx(3.0, 4.0);
  CHECK(frobenius_norm(m) == doctest::Approx(5.0));
}

TEST_CASE("contraction predicates") {
  CHECK(is_strict_contraction(Mat::Zero(2, 2)));
  CHECK_FALSE(is_strict_contraction(Mat::Identity(2, 2)));  // boundary
  CHECK(is_contraction(Mat::Identity(2, 2)));

  std::mt19937_64 rng(16);
  Mat u = Mat::Identity(3, 3);
  // scaled Haar-ish unitary via QR of a random matrix
  Eigen::HouseholderQR<Mat> qr(test::random_complex(3, rng));
  u = qr.householderQ();
  CHECK(is_strict_contraction(Mat(0.5 * u)));
  RealVec sv = singular_values(Mat(0.5 * u));
  for (int i = 0; i < 3; ++i) CHECK(sv(i) == doctest::Approx(0.5));
}

TEST_CASE("polar decomposition") {
  std::mt19937_64 rng(17);
  Eigen::HouseholderQR<Mat> qr(test::random_complex(3, rng));
  Mat u = qr.householderQ();

  SUBCASE("unitary input") {
    auto pd = polar_decompose(u);
    CHECK((pd.unitary - u).norm() < 1e-10);
    CHECK((pd.hermitian.mat() - Mat::Identity(3, 3)).norm() < 1e-10);
  }

  SUBCASE("scaled identity") {
    auto pd = polar_decompose(Mat(2.0 * Mat::Identity(2, 2)));
    CHECK((pd.unitary - Mat::Identity(2, 2)).norm() < 1e-12);
    CHECK((pd.hermitian.mat() - 4.0 * Mat::Identity(2, 2)).norm() < 1e-12);
  }

  SUBCASE("random reconstruction, 1000 matrices") {
    int count = 0;
    for (int p = 1; p <= 4; ++p) {
      for (int trial = 0; trial < 250; ++trial) {
        Mat m = test::random_complex(p, rng) + 0.5 * Mat::Identity(p, p);
        if (singular_values(m)(0) < 1e-6) continue;
        auto pd = polar_decompose(m);
        CHECK((pd.unitary.adjoint() * pd.unitary - Mat::Identity(p, p)).norm() < 1e-10);
        Mat rebuilt = pd.unitary * hermitian_sqrt(pd.hermitian).mat();
        CHECK((rebuilt - m).norm() <= 1e-10 * std::max(m.norm(), 1.0));
        ++count;
      }
    }
    CHECK(count > 900);
  }

  SUBCASE("rank deficient input rejected") {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 1.0;
    CHECK_THROWS_AS(polar_decompose(m), RankDeficient);
  }
}
