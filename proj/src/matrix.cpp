#include "matmom/matrix.hpp"

#include <cmath>
#include <limits>

namespace matmom {

void check_square(const Mat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch(std::string(what) + ": expected a square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void check_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) throw BadShape(std::string(what) + ": non-finite entries");
}

Mat hermitize(const Mat& m) {
  check_square(m);
  Mat h = 0.5 * (m + m.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = Cplx(h(i, i).real(), 0.0);
  return h;
}

double frobenius_norm(const Mat& m) { return m.norm(); }

HermitianMatrix::HermitianMatrix(const Mat& m) : mat_(hermitize(m)) {
  check_finite(mat_, "HermitianMatrix");
}

PsdMatrix::PsdMatrix(const HermitianMatrix& h) : base_(h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.mat(), Eigen::EigenvaluesOnly);
  const RealVec& ev = es.eigenvalues();
  min_eig_ = ev(0);
  spectral_norm_ = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  if (min_eig_ < -kRelTol * spectral_norm_) {
    throw NotPsd("PsdMatrix: min eigenvalue " + std::to_string(min_eig_) +
                 " below tolerance for norm " + std::to_string(spectral_norm_));
  }
}

bool PsdMatrix::positive_definite() const {
  return min_eig_ > kRelTol * std::max(spectral_norm_, 1.0);
}

LoewnerOrder loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("loewner_compare: dimensions differ");
  Mat d = b.mat() - a.mat();
  Eigen::SelfAdjointEigenSolver<Mat> es(d, Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues()(0);
  double scale = std::max({std::abs(lo), std::abs(es.eigenvalues()(d.rows() - 1)), 1.0});
  if (lo > kRelTol * scale) return LoewnerOrder::LessStrict;
  if (lo >= -kRelTol * scale) return LoewnerOrder::LessEq;
  return LoewnerOrder::Incomparable;
}

namespace {

// Eigendecomposition with eigenvalues mapped through fn; negatives within
// the PSD tolerance are clamped to zero first.
Mat map_psd_eigenvalues(const PsdMatrix& a, double (*fn)(double)) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a.mat());
  RealVec ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double v = std::max(ev(i), 0.0);
    ev(i) = fn(v);
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

PsdMatrix hermitian_sqrt(const PsdMatrix& a) {
  return PsdMatrix(map_psd_eigenvalues(a, [](double v) { return std::sqrt(v); }));
}

PsdMatrix inv_sqrt(const PsdMatrix& a) {
  if (!a.positive_definite()) {
    throw Singular("inv_sqrt: matrix is singular within tolerance");
  }
  return PsdMatrix(map_psd_eigenvalues(a, [](double v) { return 1.0 / std::sqrt(v); }));
}

double log_det(const PsdMatrix& a) {
  if (!a.positive_definite()) throw Singular("log_det: not positive definite");
  Eigen::LLT<Mat> llt(a.mat());
  if (llt.info() != Eigen::Success) throw Singular("log_det: Cholesky failed");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::log(llt.matrixL()(i, i).real());
  return 2.0 * s;
}

RealVec hermitian_eigenvalues(const Mat& m) {
  check_square(m);
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

RealVec singular_values(const Mat& m) {
  check_square(m);
  RealVec ev = hermitian_eigenvalues(m.adjoint() * m);
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::sqrt(std::max(ev(i), 0.0));
  return ev;
}

double max_singular_value(const Mat& m) {
  RealVec sv = singular_values(m);
  return sv(sv.size() - 1);
}

bool is_strict_contraction(const Mat& m) { return max_singular_value(m) < 1.0 - kRelTol; }

bool is_contraction(const Mat& m) { return max_singular_value(m) <= 1.0 + kRelTol; }

PolarDecomposition polar_decompose(const Mat& m) {
  check_square(m);
  RealVec sv = singular_values(m);
  if (sv(0) <= kRelTol * std::max(sv(sv.size() - 1), 1.0)) {
    throw RankDeficient("polar_decompose: smallest singular value within tolerance of zero");
  }
  PsdMatrix h{hermitize(m.adjoint() * m)};
  Mat u = m * inv_sqrt(h).mat();
  return PolarDecomposition{std::move(u), std::move(h)};
}

}  // namespace matmom
