#include "matmom/circle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace matmom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gamma_j for any sign of j, under Gamma_0 = I, Gamma_{-j} = Gamma_j^*.
Mat trig_moment_at(const TrigMomentVector& g, int j) {
  if (j == 0) return Mat::Identity(g.p, g.p);
  if (j > 0) return g.moments[j - 1];
  return g.moments[-j - 1].adjoint();
}

Mat toeplitz_of_order(const TrigMomentVector& g, int n) {
  const int p = g.p;
  Mat t((n + 1) * p, (n + 1) * p);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) t.block(i * p, j * p, p, p) = trig_moment_at(g, i - j);
  return t;
}

bool positive_definite_within_tol(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  const RealVec& ev = es.eigenvalues();
  double scale = std::max(std::abs(ev(ev.size() - 1)), 1.0);
  return ev(0) > kRelTol * scale;
}

// The rows below pair block l with T_{n-1}'s index l. With that pairing the
// bordered Schur complements of T_{n+1} are I - pos T^{-1} pos^* (last
// corner, the positive moments in decreasing order) and
// I - neg T^{-1} neg^* (first corner, the negative moments).

// Block row (Gamma_n, ..., Gamma_1), p x np.
Mat positive_row(const TrigMomentVector& g, int n) {
  Mat row(g.p, n * g.p);
  for (int j = 0; j < n; ++j) row.middleCols(j * g.p, g.p) = trig_moment_at(g, n - j);
  return row;
}

// Block row (Gamma_{-1}, ..., Gamma_{-n}), p x np.
Mat negative_row(const TrigMomentVector& g, int n) {
  Mat row(g.p, n * g.p);
  for (int j = 0; j < n; ++j) row.middleCols(j * g.p, g.p) = trig_moment_at(g, -(j + 1));
  return row;
}

TrigMomentVector prefix_of(const TrigMomentVector& g, int n) {
  TrigMomentVector out{g.p, {}};
  out.moments.assign(g.moments.begin(), g.moments.begin() + n);
  return out;
}

LrmState lrm_at_level(const TrigMomentVector& g, int n) {
  const int p = g.p;
  if (n == 0) {
    return LrmState{PsdMatrix::identity(p), PsdMatrix::identity(p), Mat::Zero(p, p), 0};
  }
  Mat t = toeplitz_of_order(g, n - 1);
  Eigen::LLT<Mat> llt(t);
  if (llt.info() != Eigen::Success) throw NotInterior("block Toeplitz not positive definite");
  // One step of iterative refinement; near-boundary Toeplitz levels are ill
  // conditioned and the residual correction restores the lost accuracy.
  auto refined_solve = [&](const Mat& rhs) {
    Mat x = llt.solve(rhs);
    x += llt.solve(Mat(rhs - t * x));
    return x;
  };
  Mat pos = positive_row(g, n);
  Mat neg = negative_row(g, n);
  Mat t_inv_pos = refined_solve(pos.adjoint());   // T^{-1} (Gamma_1..Gamma_n)^*
  Mat t_inv_neg = refined_solve(neg.adjoint());   // T^{-1} (Gamma_{-n}..Gamma_{-1})^*
  Mat left = hermitize(Mat::Identity(p, p) - pos * t_inv_pos);
  Mat right = hermitize(Mat::Identity(p, p) - neg * t_inv_neg);
  Mat mixed = pos * t_inv_neg;
  return LrmState{PsdMatrix(left), PsdMatrix(right), std::move(mixed), n};
}

// Eigenvalue sum of log(1 - sigma_i^2) for one contraction, or -inf.
double log_det_defect(const Mat& a) {
  RealVec ev = hermitian_eigenvalues(a.adjoint() * a);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double v = 1.0 - ev(i);
    if (v <= kRelTol) return -kInf;
    sum += std::log(v);
  }
  return sum;
}

}  // namespace

HermitianMatrix block_toeplitz(const TrigMomentVector& g) {
  return HermitianMatrix(toeplitz_of_order(g, g.order()));
}

bool is_interior_circle(const TrigMomentVector& g) {
  return positive_definite_within_tol(toeplitz_of_order(g, g.order()));
}

LrmState lrm_matrices(const TrigMomentVector& g) {
  if (g.order() >= 1 && !is_interior_circle(prefix_of(g, g.order() - 1)))
    throw NotInterior("lrm_matrices: prefix not in the interior");
  return lrm_at_level(g, g.order());
}

CircleCanonicalVector to_canonical_circle(const TrigMomentVector& g) {
  if (!is_interior_circle(g)) throw NotInterior("to_canonical_circle: not in the interior");
  CircleCanonicalVector a;
  a.p = g.p;
  a.canon.reserve(g.order());
  for (int j = 1; j <= g.order(); ++j) {
    LrmState state = lrm_at_level(g, j - 1);
    Mat lm = inv_sqrt(state.left).mat();
    Mat rm = inv_sqrt(state.right).mat();
    a.canon.push_back(Mat(lm * (trig_moment_at(g, j) - state.mixed) * rm));
  }
  return a;
}

TrigMomentVector from_canonical_circle(const CircleCanonicalVector& a) {
  const int p = a.p;
  TrigMomentVector g{p, {}};
  g.moments.reserve(a.order());
  PsdMatrix left = PsdMatrix::identity(p);
  PsdMatrix right = PsdMatrix::identity(p);
  for (int k = 1; k <= a.order(); ++k) {
    const Mat& ak = a.canon[k - 1];
    if (!is_strict_contraction(ak)) {
      throw NotStrictContraction("from_canonical_circle: A_" + std::to_string(k) +
                                 " is not a strict contraction");
    }
    // M_{k-1} recomputed from the prefix; L/R advanced by the Szego recursion.
    Mat mixed = (k == 1) ? Mat::Zero(p, p) : lrm_at_level(g, k - 1).mixed;
    Mat gk = hermitian_sqrt(left).mat() * ak * hermitian_sqrt(right).mat() + mixed;
    auto advanced = lr_recursion(LrmState{left, right, mixed, k - 1}, ak);
    left = advanced.first;
    right = advanced.second;
    g.moments.push_back(std::move(gk));
  }
  return g;
}

std::pair<PsdMatrix, PsdMatrix> lr_recursion(const LrmState& state, const Mat& a) {
  const int p = static_cast<int>(a.rows());
  if (!is_strict_contraction(a)) {
    throw NotStrictContraction("lr_recursion: not a strict contraction");
  }
  Mat lsq = hermitian_sqrt(state.left).mat();
  Mat rsq = hermitian_sqrt(state.right).mat();
  Mat eye = Mat::Identity(p, p);
  Mat l_next = hermitize(lsq * (eye - a * a.adjoint()) * lsq);
  Mat r_next = hermitize(rsq * (eye - a.adjoint() * a) * rsq);
  return {PsdMatrix(l_next), PsdMatrix(r_next)};
}

double toeplitz_det_ratio(const TrigMomentVector& g) {
  const int k = g.order();
  if (k < 1) throw BadShape("toeplitz_det_ratio: need k >= 1");
  if (!is_interior_circle(g)) throw NotInterior("toeplitz_det_ratio: not in the interior");
  auto log_det_pd = [](const Mat& m) {
    Eigen::LLT<Mat> llt(m);
    if (llt.info() != Eigen::Success) throw NotInterior("toeplitz_det_ratio: Cholesky failed");
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) s += std::log(llt.matrixL()(i, i).real());
    return 2.0 * s;
  };
  double num = log_det_pd(toeplitz_of_order(g, k));
  double den = log_det_pd(toeplitz_of_order(g, k - 1));
  return std::exp(num - den);
}

TrigMomentVector trig_moments_of_measure(const DiscreteMatrixMeasure& mu, int n) {
  if (!mu.normalized()) throw NotNormalized("trig_moments_of_measure: weights do not sum to I");
  TrigMomentVector g{mu.p, {}};
  g.moments.reserve(n);
  for (int j = 1; j <= n; ++j) {
    Mat gj = Mat::Zero(mu.p, mu.p);
    for (const auto& atom : mu.atoms) {
      gj += std::polar(1.0, j * atom.location) * atom.weight.mat();
    }
    g.moments.push_back(std::move(gj));
  }
  return g;
}

TrigMomentVector trig_moments_of_measure(const DensityGridMeasure& mu, int n) {
  if (!mu.normalized()) throw NotNormalized("trig_moments_of_measure: grid not normalized");
  TrigMomentVector g{mu.p, {}};
  g.moments.reserve(n);
  for (int j = 1; j <= n; ++j) {
    Mat gj = Mat::Zero(mu.p, mu.p);
    for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
      gj += mu.quadrature_weights[i] * std::polar(1.0, j * mu.nodes[i]) * mu.values[i].mat();
    }
    if (mu.singular_mass) {
      for (const auto& atom : mu.singular_mass->atoms)
        gj += std::polar(1.0, j * atom.location) * atom.weight.mat();
    }
    g.moments.push_back(std::move(gj));
  }
  return g;
}

double rate_canonical_circle(const CircleCanonicalVector& a) {
  const int p = a.p;
  double sum = 0.0;
  for (const auto& ak : a.canon) {
    double v = log_det_defect(ak);
    if (v == -kInf) return kInf;
    sum += v;
  }
  return -2.0 * p * sum;
}

double rate_moments_circle(const TrigMomentVector& g) {
  if (!is_interior_circle(g)) return kInf;
  return -2.0 * g.p * std::log(toeplitz_det_ratio(g));
}

double rate_measure_circle(const DensityGridMeasure& mu) {
  if (mu.nodes.size() < 8) throw GridTooCoarse("rate_measure_circle: need at least 8 nodes");
  const int p = mu.p;
  double integral = 0.0;  // integral of log det W against dtheta/2pi
  for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
    if (mu.quadrature_weights[i] <= 0.0) continue;
    RealVec ev = hermitian_eigenvalues(mu.values[i].mat());
    double logdet = 0.0;
    for (Eigen::Index j = 0; j < ev.size(); ++j) {
      if (ev(j) <= 0.0) return kInf;
      logdet += std::log(ev(j));
    }
    integral += mu.quadrature_weights[i] * logdet;
  }
  return -2.0 * p * integral;
}

double linearization_residual(const CircleCanonicalVector& a, double eps) {
  if (eps <= 0.0) throw BadShape("linearization_residual: eps must be positive");
  CircleCanonicalVector scaled{a.p, {}};
  double norm_sq = 0.0;
  for (const auto& ak : a.canon) {
    scaled.canon.push_back(Mat(eps * ak));
    norm_sq += ak.squaredNorm();
  }
  double norm = std::sqrt(norm_sq);
  if (norm == 0.0) return 0.0;
  TrigMomentVector g = from_canonical_circle(scaled);
  double diff_sq = 0.0;
  for (int i = 0; i < g.order(); ++i) diff_sq += (g.moments[i] - scaled.canon[i]).squaredNorm();
  return std::sqrt(diff_sq) / (eps * norm);
}

}  // namespace matmom
