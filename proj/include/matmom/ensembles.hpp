#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matmom/circle.hpp"
#include "matmom/interval.hpp"
#include "matmom/matrix.hpp"

namespace matmom {

using Rng = std::mt19937_64;

/// Reproducible stream handle: identical (seed, stream) gives identical
/// draws regardless of how batches are sharded across threads.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngStream substream(std::uint64_t index) const;
  Rng engine() const;
};

struct EnsembleParams {
  int p = 1;
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  int k = 0;
};

struct SampleBatch {
  std::string ensemble;
  EnsembleParams params;
  RngStream provenance;
  std::vector<Mat> draws;
};

/// i.i.d. entries with density pi^{-1} e^{-|g|^2} (real and imaginary
/// parts independent N(0, 1/2)).
Mat sample_ginibre(int p, Rng& rng);

/// Density proportional to e^{-tr X^2 / 2}: real N(0,1) diagonal,
/// N(0,1/2) + i N(0,1/2) above the diagonal.
HermitianMatrix sample_gue(int p, Rng& rng);

/// Haar unitary via QR of a Ginibre draw with the R-diagonal phase fix.
Mat sample_haar_unitary(int p, Rng& rng);

/// Complex Wishart W_p(a), density Gamma_p(a)^{-1} det(X)^{a-p} e^{-tr X}.
/// Small integer shapes use X = G G^* with G p x a standard complex
/// Gaussian; otherwise the triangular Bartlett construction.
PsdMatrix sample_complex_wishart(int p, double a, Rng& rng);

/// Matrix Beta_p(a,b) as (W1+W2)^{-1/2} W1 (W1+W2)^{-1/2}.
HermitianMatrix sample_matrix_beta(int p, double a, double b, Rng& rng);

/// Canonical moments of a uniform draw from the interval moment space:
/// U_k ~ Beta_p(p(n-k+1), p(n-k+1)) independent.
IntervalCanonicalVector sample_uniform_canonical_interval(int n, int p, Rng& rng);

/// Verblunsky coefficients of a uniform draw from the circle moment space:
/// A_k = V_k B_k^{1/2}, V_k Haar, B_k ~ Beta_p(p, 2p(n-k)+p). The optional
/// prefix length samples only A_1..A_k of the level-n vector.
CircleCanonicalVector sample_uniform_canonical_circle(int n, int p, Rng& rng);
CircleCanonicalVector sample_uniform_canonical_circle_prefix(int n, int p, int k, Rng& rng);

/// Top-left p x p block of a Haar unitary of size p+q; density on the
/// matrix ball proportional to det(I - A A^*)^{q-p}.
Mat haar_subblock(int p, int q, Rng& rng);

/// log Gamma_p(a) = p(p-1)/2 log pi + sum_i log Gamma(a-i+1).
double log_multivariate_gamma(int p, double a);
/// log of the normalizing constant B_p(a,b).
double log_beta_p(int p, double a, double b);

/// Log density of Beta_p(a,b) at X; -infinity outside 0 < X < I.
double log_density_beta(int p, double a, double b, const HermitianMatrix& x);

/// Log density of W_p(a) at X; -infinity outside the PD cone.
double log_density_wishart(int p, double a, const HermitianMatrix& x);

/// Log density of the k-th circle canonical moment at level n, i.e. of
/// det(I - A^*A)^{2p(n-k)} / c with c = pi^{p^2} B_p(p, 2p(n-k)+p).
double log_density_circle_canonical(int p, int n, int k, const Mat& a);

/// tr X - a log det X - ap(1 - log a); +infinity if X is not PD.
double wishart_rate(const HermitianMatrix& x, double a);

/// -a log det(B - B^2) - 2ap log 2 on 0 < B < I; +infinity otherwise.
double beta_rate_symmetric(const HermitianMatrix& b, double a);

/// -a log det(I - B) on 0 < B < I; +infinity otherwise.
double beta_rate_asymmetric(const HermitianMatrix& b, double a);

/// tr X for PSD X, +infinity otherwise.
double scaled_wishart_rate(const HermitianMatrix& x);

/// Laplace transform -a log det(I - K) for K < I, +infinity otherwise.
double wishart_laplace(const HermitianMatrix& k, double a);

/// Deterministic batch generation with per-draw substreams.
SampleBatch sample_batch(const std::string& ensemble, const EnsembleParams& params, int count,
                         RngStream stream);

}  // namespace matmom
