#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace matmom {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

// Relative tolerance used for all degeneracy decisions (PSD clamping,
// interiority margins, contraction margins).
inline constexpr double kRelTol = 1e-10;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotPsd : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct NotInterior : Error { using Error::Error; };
struct NotInInterior : NotInterior { using NotInterior::NotInterior; };
struct NotContraction : Error { using Error::Error; };
struct NotStrictContraction : NotContraction { using NotContraction::NotContraction; };
struct BadShape : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct NonInvertible : Error { using Error::Error; };
struct TooCloseToBoundary : Error { using Error::Error; };
struct InconsistentInputs : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

void check_square(const Mat& m, const char* what = "matrix");
void check_finite(const Mat& m, const char* what = "matrix");

/// (M + M*)/2 with exactly real diagonal.
Mat hermitize(const Mat& m);

double frobenius_norm(const Mat& m);

/// Hermitian p x p matrix; symmetrized once at construction so the
/// invariant entries[i][j] == conj(entries[j][i]) holds exactly.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Mat& m);

  const Mat& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  static HermitianMatrix identity(int p) { return HermitianMatrix(Mat::Identity(p, p)); }
  static HermitianMatrix zero(int p) { return HermitianMatrix(Mat::Zero(p, p)); }

 private:
  Mat mat_;
};

/// Hermitian nonnegative matrix. Construction runs one eigendecomposition,
/// caches the extreme eigenvalues and rejects anything below
/// -kRelTol * spectral norm. Eigenvalues in [-tol, 0] are treated as 0.
class PsdMatrix {
 public:
  explicit PsdMatrix(const HermitianMatrix& h);
  explicit PsdMatrix(const Mat& m) : PsdMatrix(HermitianMatrix(m)) {}

  const Mat& mat() const { return base_.mat(); }
  const HermitianMatrix& hermitian() const { return base_; }
  int dim() const { return base_.dim(); }

  double min_eigenvalue() const { return min_eig_; }
  double spectral_norm() const { return spectral_norm_; }
  bool positive_definite() const;

  static PsdMatrix identity(int p) { return PsdMatrix(Mat::Identity(p, p)); }

 private:
  HermitianMatrix base_;
  double min_eig_;
  double spectral_norm_;
};

enum class LoewnerOrder { LessStrict, LessEq, Incomparable };

/// Classifies B - A in the Loewner order, within the module tolerance.
LoewnerOrder loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b);

/// Unique nonnegative square root, via Hermitian eigendecomposition.
PsdMatrix hermitian_sqrt(const PsdMatrix& a);

/// A^{-1/2} for positive definite A. Throws Singular at the boundary.
PsdMatrix inv_sqrt(const PsdMatrix& a);

/// log det A through the Cholesky diagonal; throws Singular if A is not
/// positive definite (rate-function callers map that to +infinity).
double log_det(const PsdMatrix& a);

/// Eigenvalues of a Hermitian matrix, ascending.
RealVec hermitian_eigenvalues(const Mat& m);

/// Singular values of a square M, computed as sqrt of eigenvalues of M*M.
RealVec singular_values(const Mat& m);

double max_singular_value(const Mat& m);

/// Largest singular value < 1 - tol (interior of the matrix unit ball).
bool is_strict_contraction(const Mat& m);
/// Companion flag: largest singular value <= 1 + tol (closed ball).
bool is_contraction(const Mat& m);

struct PolarDecomposition {
  Mat unitary;        // U = M (M*M)^{-1/2}
  PsdMatrix hermitian; // H = M*M, so M = U H^{1/2}
};

/// Right polar decomposition M = U H^{1/2}. Requires full rank.
PolarDecomposition polar_decompose(const Mat& m);

}  // namespace matmom
