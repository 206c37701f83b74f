#pragma once

#include <utility>
#include <vector>

#include "matmom/matrix.hpp"
#include "matmom/measure.hpp"

namespace matmom {

struct CircleCanonicalVector;

/// Moment sequence S_1..S_n of a matrix measure on [0,1]; S_0 = I implicit.
struct IntervalMomentVector {
  int p = 0;
  std::vector<HermitianMatrix> moments;

  int order() const { return static_cast<int>(moments.size()); }
};

/// Canonical moment sequence U_1..U_n, each strictly between 0 and I.
struct IntervalCanonicalVector {
  int p = 0;
  std::vector<HermitianMatrix> canon;

  int order() const { return static_cast<int>(canon.size()); }
};

/// Admissible range (S^-, S^+) of the next moment given a prefix.
struct MomentRange {
  HermitianMatrix lower;
  HermitianMatrix upper;
};

/// The pair of block Hankel matrices of the full vector; for n = 2m these
/// are (m+1)p and mp square, for n = 2m+1 both (m+1)p square.
std::pair<HermitianMatrix, HermitianMatrix> hankel_pair(const IntervalMomentVector& s);

/// True iff both block Hankel matrices are positive definite within tolerance.
bool is_interior_interval(const IntervalMomentVector& s);

/// Range of the next moment S_{n+1} given the interior prefix S_1..S_n.
/// n = 0 returns (0, I); the conventions S^-_1 = 0, S^+_1 = I, S^+_2 = S_1
/// are applied without Hankel inversion.
MomentRange moment_range(const IntervalMomentVector& prefix);

IntervalCanonicalVector to_canonical_interval(const IntervalMomentVector& s);
IntervalMomentVector from_canonical_interval(const IntervalCanonicalVector& u);

/// prod_i det(U_i (I - U_i)); equals det(S^+_{k+1} - S^-_{k+1}).
double range_det_identity(const IntervalCanonicalVector& u);

IntervalMomentVector moments_of_measure(const DiscreteMatrixMeasure& mu, int n);
IntervalMomentVector moments_of_measure(const DensityGridMeasure& mu, int n);

/// -sum_i p log det(U_i - U_i^2) - 2kp^2 log 2, +infinity on the boundary.
double rate_canonical_interval(const IntervalCanonicalVector& u);

/// -p log det(S^+_{k+1} - S^-_{k+1}) - 2kp^2 log 2, +infinity outside the interior.
double rate_moments_interval(const IntervalMomentVector& s);

/// -p * integral of log det W against the arcsine law, by the measure's own
/// quadrature grid. W is the density relative to arcsine; the singular part
/// does not enter. +infinity where det W vanishes on nodes of positive mass.
double rate_measure_interval(const DensityGridMeasure& mu);

/// A_i = 2 U_i - I, mapping interval canonical moments to the Hermitian
/// slice of the circle canonical moments (and back).
CircleCanonicalVector interval_circle_bridge(const IntervalCanonicalVector& u);
IntervalCanonicalVector circle_interval_bridge(const CircleCanonicalVector& a);

}  // namespace matmom
