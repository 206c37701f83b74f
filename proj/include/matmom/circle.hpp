#pragma once

#include <utility>
#include <vector>

#include "matmom/matrix.hpp"
#include "matmom/measure.hpp"

namespace matmom {

/// Trigonometric moments Gamma_1..Gamma_n; Gamma_0 = I and
/// Gamma_{-j} = Gamma_j^* are implicit conventions applied everywhere.
struct TrigMomentVector {
  int p = 0;
  std::vector<Mat> moments;

  int order() const { return static_cast<int>(moments.size()); }
};

/// Verblunsky sequence A_1..A_n, each a strict contraction.
struct CircleCanonicalVector {
  int p = 0;
  std::vector<Mat> canon;

  int order() const { return static_cast<int>(canon.size()); }
};

/// The L/R/M matrices describing the range of the next moment at one level.
struct LrmState {
  PsdMatrix left;
  PsdMatrix right;
  Mat mixed;
  int level = 0;
};

/// Block Toeplitz T_n of Gamma_0..Gamma_n, size (n+1)p, Hermitian.
HermitianMatrix block_toeplitz(const TrigMomentVector& g);

/// True iff T_n is positive definite within tolerance.
bool is_interior_circle(const TrigMomentVector& g);

/// L_n, R_n, M_n from the direct Toeplitz-solve formulas.
LrmState lrm_matrices(const TrigMomentVector& g);

CircleCanonicalVector to_canonical_circle(const TrigMomentVector& g);
TrigMomentVector from_canonical_circle(const CircleCanonicalVector& a);

/// One Szego step: L_k = L^{1/2}(I - A A^*)L^{1/2}, R_k = R^{1/2}(I - A^*A)R^{1/2}.
std::pair<PsdMatrix, PsdMatrix> lr_recursion(const LrmState& state, const Mat& a);

/// det T_k / det T_{k-1}; equals prod_i det(I - A_i^* A_i).
double toeplitz_det_ratio(const TrigMomentVector& g);

TrigMomentVector trig_moments_of_measure(const DiscreteMatrixMeasure& mu, int n);
TrigMomentVector trig_moments_of_measure(const DensityGridMeasure& mu, int n);

/// -2p sum_i log det(I - A_i^* A_i); +infinity off the strict contractions.
double rate_canonical_circle(const CircleCanonicalVector& a);

/// -2p log(det T_k / det T_{k-1}); +infinity outside the interior.
double rate_moments_circle(const TrigMomentVector& g);

/// -(p/pi) * integral of log det W(theta), W relative to dtheta/2pi, using
/// the measure's angular grid (trapezoid on a uniform grid).
double rate_measure_circle(const DensityGridMeasure& mu);

/// || psi^{-1}(eps A) - eps A || / (eps ||A||), the first-order Taylor
/// residual of the inverse canonical-moment map at zero.
double linearization_residual(const CircleCanonicalVector& a, double eps);

}  // namespace matmom
