#include "matmom/interval.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "matmom/circle.hpp"

namespace matmom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// S_j with the S_0 = I convention, 0 <= j <= n.
Mat moment_at(const IntervalMomentVector& s, int j) {
  if (j == 0) return Mat::Identity(s.p, s.p);
  return s.moments[j - 1].mat();
}

Mat assemble_blocks(const IntervalMomentVector& s, int rows, int cols,
                    const std::function<Mat(int, int)>& block) {
  const int p = s.p;
  Mat out(rows * p, cols * p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.block(i * p, j * p, p, p) = block(i, j);
  return out;
}

// Lower Hankel H_n (the one containing S_0 for even n).
Mat lower_hankel(const IntervalMomentVector& s, int n) {
  int m = n / 2;
  if (n % 2 == 0) {
    return assemble_blocks(s, m + 1, m + 1,
                           [&](int i, int j) { return moment_at(s, i + j); });
  }
  return assemble_blocks(s, m + 1, m + 1,
                         [&](int i, int j) { return moment_at(s, i + j + 1); });
}

// Upper Hankel built from the differences S_j - S_{j+1}.
Mat upper_hankel(const IntervalMomentVector& s, int n) {
  int m = n / 2;
  if (n % 2 == 0) {
    return assemble_blocks(s, m, m, [&](int i, int j) {
      return Mat(moment_at(s, i + j + 1) - moment_at(s, i + j + 2));
    });
  }
  return assemble_blocks(s, m + 1, m + 1, [&](int i, int j) {
    return Mat(moment_at(s, i + j) - moment_at(s, i + j + 1));
  });
}

// Block row (p x len*p) of moments S_{start}, S_{start+1}, ...
Mat moment_row(const IntervalMomentVector& s, int start, int len) {
  Mat row(s.p, len * s.p);
  for (int j = 0; j < len; ++j) row.middleCols(j * s.p, s.p) = moment_at(s, start + j);
  return row;
}

Mat difference_row(const IntervalMomentVector& s, int start, int len) {
  Mat row(s.p, len * s.p);
  for (int j = 0; j < len; ++j)
    row.middleCols(j * s.p, s.p) = moment_at(s, start + j) - moment_at(s, start + j + 1);
  return row;
}

// row * H^{-1} * row^* through a Cholesky solve with one step of iterative
// refinement; the deeper Hankel levels are ill conditioned and the extra
// residual correction buys back most of the lost digits.
Mat quadratic_form(const Mat& h, const Mat& row) {
  Eigen::LLT<Mat> llt(h);
  if (llt.info() != Eigen::Success) throw NotInterior("Hankel matrix not positive definite");
  Mat rhs = row.adjoint();
  Mat solved = llt.solve(rhs);
  solved += llt.solve(Mat(rhs - h * solved));
  return hermitize(row * solved);
}

}  // namespace

std::pair<HermitianMatrix, HermitianMatrix> hankel_pair(const IntervalMomentVector& s) {
  int n = s.order();
  if (n < 1) throw BadShape("hankel_pair: need n >= 1");
  return {HermitianMatrix(lower_hankel(s, n)), HermitianMatrix(upper_hankel(s, n))};
}

namespace {

// Positive definiteness of both Hankels, checked level by level in the
// normalized coordinates: every range width must be PD at its own scale and
// every moment strictly inside its range. Equivalent to the Hankel test in
// exact arithmetic, but scale-invariant (the raw Hankel spectra decay like
// 4^{-k} and a relative eigenvalue cut on them would reject deep-interior
// points at large n).
bool canonical_steps(const IntervalMomentVector& s, IntervalCanonicalVector* out) {
  IntervalMomentVector prefix{s.p, {}};
  if (out) out->canon.reserve(s.order());
  for (int k = 1; k <= s.order(); ++k) {
    MomentRange range = [&]() -> MomentRange {
      try {
        return moment_range(prefix);
      } catch (const NotInterior&) {
        return MomentRange{HermitianMatrix::zero(s.p), HermitianMatrix::zero(s.p)};
      }
    }();
    Mat width = range.upper.mat() - range.lower.mat();
    RealVec wev = hermitian_eigenvalues(width);
    if (wev(0) <= kRelTol * std::max(wev(wev.size() - 1), 0.0)) return false;
    Mat wjm = inv_sqrt(PsdMatrix(width)).mat();
    Mat uk = hermitize(wjm * (moment_at(s, k) - range.lower.mat()) * wjm);
    RealVec uev = hermitian_eigenvalues(uk);
    if (uev(0) <= kRelTol || uev(uev.size() - 1) >= 1.0 - kRelTol) return false;
    if (out) out->canon.emplace_back(uk);
    prefix.moments.push_back(s.moments[k - 1]);
  }
  return true;
}

}  // namespace

bool is_interior_interval(const IntervalMomentVector& s) {
  if (s.order() == 0) return true;
  return canonical_steps(s, nullptr);
}

MomentRange moment_range(const IntervalMomentVector& prefix) {
  const int p = prefix.p;
  const int n = prefix.order();
  if (n == 0) {
    return MomentRange{HermitianMatrix::zero(p), HermitianMatrix::identity(p)};
  }
  // S^-_{n+1} = hl*_n  Hl^{-1}_{n-1} hl_n.
  int m = n / 2;
  Mat lower;
  if (n % 2 == 0) {
    // hl*_{2m} = (S_{m+1}, ..., S_{2m}), Hl_{2m-1}.
    lower = quadratic_form(lower_hankel(prefix, n - 1), moment_row(prefix, m + 1, m));
  } else {
    // hl*_{2m+1} = (S_{m+1}, ..., S_{2m+1}), Hl_{2m}.
    lower = quadratic_form(lower_hankel(prefix, n - 1), moment_row(prefix, m + 1, m + 1));
  }
  Mat upper;
  if (n == 1) {
    upper = moment_at(prefix, 1);  // S^+_2 = S_1
  } else if (n % 2 == 0) {
    // hu*_{2m} = (S_m - S_{m+1}, ..., S_{2m-1} - S_{2m}), Hu_{2m-1}.
    upper = moment_at(prefix, n) -
            quadratic_form(upper_hankel(prefix, n - 1), difference_row(prefix, m, m));
  } else {
    // hu*_{2m+1} = (S_{m+1} - S_{m+2}, ..., S_{2m} - S_{2m+1}), Hu_{2m}.
    upper = moment_at(prefix, n) -
            quadratic_form(upper_hankel(prefix, n - 1), difference_row(prefix, m + 1, m));
  }
  return MomentRange{HermitianMatrix(lower), HermitianMatrix(upper)};
}

IntervalCanonicalVector to_canonical_interval(const IntervalMomentVector& s) {
  IntervalCanonicalVector u;
  u.p = s.p;
  if (!canonical_steps(s, &u)) {
    throw NotInterior("to_canonical_interval: moment vector not in the interior");
  }
  return u;
}

namespace {

// Eigenvalues of U must stay strictly inside (0,1).
void check_open_unit_interval(const HermitianMatrix& u, int level) {
  RealVec ev = hermitian_eigenvalues(u.mat());
  if (ev(0) <= kRelTol || ev(ev.size() - 1) >= 1.0 - kRelTol) {
    throw NotInInterior("canonical moment at level " + std::to_string(level) +
                        " touches the boundary of (0, I)");
  }
}

}  // namespace

IntervalMomentVector from_canonical_interval(const IntervalCanonicalVector& u) {
  IntervalMomentVector s{u.p, {}};
  s.moments.reserve(u.order());
  for (int k = 1; k <= u.order(); ++k) {
    const HermitianMatrix& uk = u.canon[k - 1];
    if (uk.dim() != u.p) throw DimensionMismatch("from_canonical_interval: block size");
    check_open_unit_interval(uk, k);
    MomentRange range = moment_range(s);
    Mat width = range.upper.mat() - range.lower.mat();
    Mat wsq = hermitian_sqrt(PsdMatrix(width)).mat();
    Mat sk = hermitize(range.lower.mat() + wsq * uk.mat() * wsq);
    s.moments.emplace_back(sk);
  }
  return s;
}

double range_det_identity(const IntervalCanonicalVector& u) {
  double prod = 1.0;
  for (const auto& uk : u.canon) {
    RealVec ev = hermitian_eigenvalues(uk.mat());
    for (Eigen::Index i = 0; i < ev.size(); ++i) prod *= ev(i) * (1.0 - ev(i));
  }
  return prod;
}

IntervalMomentVector moments_of_measure(const DiscreteMatrixMeasure& mu, int n) {
  if (!mu.normalized()) throw NotNormalized("moments_of_measure: weights do not sum to I");
  IntervalMomentVector s{mu.p, {}};
  s.moments.reserve(n);
  for (int j = 1; j <= n; ++j) {
    Mat sj = Mat::Zero(mu.p, mu.p);
    for (const auto& atom : mu.atoms) sj += std::pow(atom.location, j) * atom.weight.mat();
    s.moments.emplace_back(sj);
  }
  return s;
}

IntervalMomentVector moments_of_measure(const DensityGridMeasure& mu, int n) {
  if (!mu.normalized()) throw NotNormalized("moments_of_measure: grid measure not normalized");
  IntervalMomentVector s{mu.p, {}};
  s.moments.reserve(n);
  for (int j = 1; j <= n; ++j) {
    Mat sj = Mat::Zero(mu.p, mu.p);
    for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
      sj += mu.quadrature_weights[i] * std::pow(mu.nodes[i], j) * mu.values[i].mat();
    }
    if (mu.singular_mass) {
      for (const auto& atom : mu.singular_mass->atoms)
        sj += std::pow(atom.location, j) * atom.weight.mat();
    }
    s.moments.emplace_back(sj);
  }
  return s;
}

double rate_canonical_interval(const IntervalCanonicalVector& u) {
  const int p = u.p;
  const int k = u.order();
  double sum = 0.0;
  for (const auto& uk : u.canon) {
    RealVec ev = hermitian_eigenvalues(uk.mat());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      double v = ev(i) * (1.0 - ev(i));
      if (v <= kRelTol) return kInf;
      sum += std::log(v);
    }
  }
  return -p * sum - 2.0 * k * p * p * std::numbers::ln2;
}

double rate_moments_interval(const IntervalMomentVector& s) {
  const int p = s.p;
  const int k = s.order();
  if (!is_interior_interval(s)) return kInf;
  MomentRange range = moment_range(s);
  Mat width = range.upper.mat() - range.lower.mat();
  RealVec ev = hermitian_eigenvalues(width);
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0.0) return kInf;
    logdet += std::log(ev(i));
  }
  return -p * logdet - 2.0 * k * p * p * std::numbers::ln2;
}

double rate_measure_interval(const DensityGridMeasure& mu) {
  if (mu.nodes.size() < 8) throw GridTooCoarse("rate_measure_interval: need at least 8 nodes");
  const int p = mu.p;
  double integral = 0.0;
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
  return -p * integral;
}

CircleCanonicalVector interval_circle_bridge(const IntervalCanonicalVector& u) {
  CircleCanonicalVector a;
  a.p = u.p;
  a.canon.reserve(u.order());
  for (const auto& uk : u.canon) {
    a.canon.push_back(Mat(2.0 * uk.mat() - Mat::Identity(u.p, u.p)));
  }
  return a;
}

IntervalCanonicalVector circle_interval_bridge(const CircleCanonicalVector& a) {
  IntervalCanonicalVector u;
  u.p = a.p;
  u.canon.reserve(a.canon.size());
  for (const auto& ak : a.canon) {
    u.canon.emplace_back(Mat(0.5 * (ak + Mat::Identity(a.p, a.p))));
  }
  return u;
}

}  // namespace matmom
