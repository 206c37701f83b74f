#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "matmom/circle.hpp"
#include "matmom/matrix.hpp"
#include "matmom/measure.hpp"

namespace matmom {

/// Schur parameters are the circle canonical moments of the associated
/// measure; the same carrier type is used for both.
using SchurParameterSequence = CircleCanonicalVector;

struct SchurTaylorCoefficients {
  int p = 0;
  std::vector<Mat> coeffs;  // G_0 .. G_{n-1}
};

struct CaratheodoryCoefficients {
  int p = 0;
  std::vector<Mat> coeffs;  // C_1 .. C_n, the conjugate trigonometric moments
};

/// Radial-limit density W(theta) on an angular grid, with a per-node flag
/// for nodes where det W vanishes (f^*f reaching the identity).
struct BoundaryDensityGrid {
  int p = 0;
  std::vector<double> angles;
  std::vector<PsdMatrix> densities;
  std::vector<bool> degenerate;
};

/// C_k = Gamma_k^*.
CaratheodoryCoefficients caratheodory_coeffs(const TrigMomentVector& g);

/// Herglotz transform F(z) = integral of (e^{i t}+z)/(e^{i t}-z) d mu(t).
Mat caratheodory_eval(const DiscreteMatrixMeasure& mu, Cplx z);
Mat caratheodory_eval(const DensityGridMeasure& mu, Cplx z);

/// Cayley pair: f = z^{-1}(F - I)(F + I)^{-1} and F = (I + zf)(I - zf)^{-1}.
Mat schur_value_from_caratheodory(const Mat& f_big, Cplx z);
Mat caratheodory_value_from_schur(const Mat& f, Cplx z);

/// Schur function of a measure at z, with a Richardson limit at z = 0.
Mat schur_eval_from_measure(const DiscreteMatrixMeasure& mu, Cplx z);

/// Schur function with a finite parameter sequence (Bernstein-Szego type),
/// by the backward recursion from f_n = 0; valid on the closed disc.
Mat schur_eval_from_params(const SchurParameterSequence& a, Cplx z);

/// Defect pair (B^R, B^L) = ((I - A^*A)^{1/2}, (I - A A^*)^{1/2}).
std::pair<PsdMatrix, PsdMatrix> defect_matrices(const Mat& a);

/// Taylor coefficients G_0..G_{n-1} of the Schur function with parameters
/// A_1..A_n; G_m depends only on A_1..A_{m+1}.
SchurTaylorCoefficients schur_taylor_from_params(const SchurParameterSequence& a);

/// Taylor coefficients by discrete Fourier transform of samples on the
/// circle |z| = radius (radius <= 1/2); independent verification path.
std::vector<Mat> fourier_taylor_coeffs(const std::function<Mat(Cplx)>& f, int p, double radius,
                                       int num_samples, int num_coeffs);

/// Solvability test: the lower-triangular block Toeplitz of G_0..G_{n-1}
/// must satisfy G G^* <= I.
bool contraction_toeplitz_test(const SchurTaylorCoefficients& g);

/// W(theta) = (I - e^{-i theta} f^*)^{-1}(I - f^*f)(I - e^{i theta} f)^{-1}.
BoundaryDensityGrid boundary_density_from_schur(const std::vector<double>& angles,
                                                const std::vector<Mat>& f_values);

/// -(p/pi) * integral of log det F^Re over the circle.
double rate_caratheodory(const BoundaryDensityGrid& f_real_part);

/// -(p/pi) * integral of log det(I - f^*f) over the circle.
double rate_schur(const std::vector<double>& angles, const std::vector<Mat>& f_values);

struct SzegoTriple {
  double canonical_sum;      // sum_k log det(I - A_k A_k^*)
  double entropy_integral;   // integral of log det W dtheta/2pi
  double schur_integral;     // integral of log det(I - f^*f) dtheta/2pi
  double jensen_correction;  // -2 integral of log |det(I - e^{i theta} f)| dtheta/2pi

  double max_pairwise_gap() const;
};

/// Cross-checks the Szego identity across the three levels; inputs must be
/// generated from one finite parameter sequence on a shared angular grid.
SzegoTriple szego_triple_identity(const SchurParameterSequence& a, const BoundaryDensityGrid& w,
                                  const std::vector<Mat>& f_values);

}  // namespace matmom
