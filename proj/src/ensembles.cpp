#include "matmom/ensembles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace matmom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double std_normal(Rng& rng) {
  static thread_local std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

Cplx std_complex_normal(Rng& rng) {
  // E|g|^2 = 1: real and imaginary parts N(0, 1/2).
  const double s = std::numbers::sqrt2 / 2.0;
  double re = std_normal(rng) * s;
  double im = std_normal(rng) * s;
  return {re, im};
}

// Bartlett factor: lower triangular, T_ii = sqrt(Gamma(a-i+1)) for the
// 1-based row index, standard complex Gaussians strictly below.
Mat bartlett_factor(int p, double a, Rng& rng) {
  Mat t = Mat::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    std::gamma_distribution<double> gamma(a - i, 1.0);
    t(i, i) = std::sqrt(gamma(rng));
    for (int j = 0; j < i; ++j) t(i, j) = std_complex_normal(rng);
  }
  return t;
}

// Eigenvalues of X must be strictly inside (0,1) for the Beta density.
bool inside_open_unit_interval(const HermitianMatrix& x, RealVec* eigenvalues) {
  *eigenvalues = hermitian_eigenvalues(x.mat());
  return (*eigenvalues)(0) > kRelTol && (*eigenvalues)(eigenvalues->size() - 1) < 1.0 - kRelTol;
}

void check_beta_shape(int p, double a, double b) {
  if (a <= p - 1 || b <= p - 1) {
    throw BadShape("matrix Beta requires a, b > p - 1");
  }
}

}  // namespace

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream{seed, splitmix64(stream ^ splitmix64(index + 1))};
}

Rng RngStream::engine() const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Mat sample_ginibre(int p, Rng& rng) {
  Mat g(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) g(i, j) = std_complex_normal(rng);
  return g;
}

HermitianMatrix sample_gue(int p, Rng& rng) {
  Mat x = Mat::Zero(p, p);
  const double s = std::numbers::sqrt2 / 2.0;
  for (int i = 0; i < p; ++i) {
    x(i, i) = std_normal(rng);
    for (int j = i + 1; j < p; ++j) {
      Cplx v(std_normal(rng) * s, std_normal(rng) * s);
      x(i, j) = v;
      x(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(x);
}

Mat sample_haar_unitary(int p, Rng& rng) {
  Mat g = sample_ginibre(p, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < p; ++j) {
    Cplx d = r(j, j);
    double mag = std::abs(d);
    Cplx phase = (mag > 0.0) ? d / mag : Cplx(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

PsdMatrix sample_complex_wishart(int p, double a, Rng& rng) {
  if (a <= p - 1) throw BadShape("sample_complex_wishart: need a > p - 1");
  bool integer_shape = std::abs(a - std::round(a)) < 1e-12;
  if (integer_shape && a <= 32.0) {
    int cols = static_cast<int>(std::round(a));
    Mat g(p, cols);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < cols; ++j) g(i, j) = std_complex_normal(rng);
    return PsdMatrix(hermitize(g * g.adjoint()));
  }
  Mat t = bartlett_factor(p, a, rng);
  return PsdMatrix(hermitize(t * t.adjoint()));
}

HermitianMatrix sample_matrix_beta(int p, double a, double b, Rng& rng) {
  check_beta_shape(p, a, b);
  Mat w1 = sample_complex_wishart(p, a, rng).mat();
  Mat w2 = sample_complex_wishart(p, b, rng).mat();
  Mat c = inv_sqrt(PsdMatrix(hermitize(w1 + w2))).mat();
  return HermitianMatrix(c * w1 * c);
}

IntervalCanonicalVector sample_uniform_canonical_interval(int n, int p, Rng& rng) {
  if (n < 1) throw BadShape("sample_uniform_canonical_interval: need n >= 1");
  IntervalCanonicalVector u;
  u.p = p;
  u.canon.reserve(n);
  for (int k = 1; k <= n; ++k) {
    double shape = static_cast<double>(p) * (n - k + 1);
    u.canon.push_back(sample_matrix_beta(p, shape, shape, rng));
  }
  return u;
}

CircleCanonicalVector sample_uniform_canonical_circle_prefix(int n, int p, int k, Rng& rng) {
  if (n < 1 || k < 1 || k > n) throw BadShape("canonical circle sampler: need 1 <= k <= n");
  CircleCanonicalVector a;
  a.p = p;
  a.canon.reserve(k);
  for (int j = 1; j <= k; ++j) {
    double b = 2.0 * p * (n - j) + p;
    Mat beta = sample_matrix_beta(p, p, b, rng).mat();
    Mat v = sample_haar_unitary(p, rng);
    a.canon.push_back(Mat(v * hermitian_sqrt(PsdMatrix(beta)).mat()));
  }
  return a;
}

CircleCanonicalVector sample_uniform_canonical_circle(int n, int p, Rng& rng) {
  return sample_uniform_canonical_circle_prefix(n, p, n, rng);
}

Mat haar_subblock(int p, int q, Rng& rng) {
  if (q < p) throw BadShape("haar_subblock: need q >= p");
  Mat u = sample_haar_unitary(p + q, rng);
  return u.topLeftCorner(p, p);
}

double log_multivariate_gamma(int p, double a) {
  if (a <= p - 1) throw BadShape("log_multivariate_gamma: need a > p - 1");
  double sum = 0.5 * p * (p - 1) * std::log(std::numbers::pi);
  for (int i = 1; i <= p; ++i) sum += std::lgamma(a - i + 1);
  return sum;
}

double log_beta_p(int p, double a, double b) {
  return log_multivariate_gamma(p, a) + log_multivariate_gamma(p, b) -
         log_multivariate_gamma(p, a + b);
}

double log_density_beta(int p, double a, double b, const HermitianMatrix& x) {
  check_beta_shape(p, a, b);
  RealVec ev;
  if (!inside_open_unit_interval(x, &ev)) return -kInf;
  double logdet_x = 0.0, logdet_one_minus = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    logdet_x += std::log(ev(i));
    logdet_one_minus += std::log(1.0 - ev(i));
  }
  return -log_beta_p(p, a, b) + (a - p) * logdet_x + (b - p) * logdet_one_minus;
}

double log_density_wishart(int p, double a, const HermitianMatrix& x) {
  if (a <= p - 1) throw BadShape("log_density_wishart: need a > p - 1");
  RealVec ev = hermitian_eigenvalues(x.mat());
  if (ev(0) <= kRelTol * std::max(std::abs(ev(ev.size() - 1)), 1.0)) return -kInf;
  double tr = 0.0, logdet = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    tr += ev(i);
    logdet += std::log(ev(i));
  }
  return -log_multivariate_gamma(p, a) + (a - p) * logdet - tr;
}

double log_density_circle_canonical(int p, int n, int k, const Mat& a) {
  if (k < 1 || k > n) throw BadShape("log_density_circle_canonical: need 1 <= k <= n");
  double exponent = 2.0 * p * (n - k);
  RealVec ev = hermitian_eigenvalues(a.adjoint() * a);
  if (ev(ev.size() - 1) >= 1.0 - kRelTol || ev(0) < -kRelTol) return -kInf;
  double logdet_defect = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) logdet_defect += std::log(1.0 - ev(i));
  // Normalizer of det(I - A^*A)^g over the matrix ball:
  // pi^{p^2} Gamma_p(g+p) / Gamma_p(g+2p), the polar-decomposition image of
  // the Beta_p(p, g+p) constant.
  double log_c = p * p * std::log(std::numbers::pi) +
                 log_multivariate_gamma(p, exponent + p) -
                 log_multivariate_gamma(p, exponent + 2.0 * p);
  return exponent * logdet_defect - log_c;
}

double wishart_rate(const HermitianMatrix& x, double a) {
  if (a <= 0.0) throw BadShape("wishart_rate: need a > 0");
  const int p = x.dim();
  RealVec ev = hermitian_eigenvalues(x.mat());
  if (ev(0) <= kRelTol * std::max(std::abs(ev(ev.size() - 1)), 1.0)) return kInf;
  double tr = 0.0, logdet = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    tr += ev(i);
    logdet += std::log(ev(i));
  }
  return tr - a * logdet - a * p * (1.0 - std::log(a));
}

double beta_rate_symmetric(const HermitianMatrix& b, double a) {
  if (a <= 0.0) throw BadShape("beta_rate_symmetric: need a > 0");
  const int p = b.dim();
  RealVec ev;
  if (!inside_open_unit_interval(b, &ev)) return kInf;
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) logdet += std::log(ev(i) * (1.0 - ev(i)));
  return -a * logdet - 2.0 * a * p * std::numbers::ln2;
}

double beta_rate_asymmetric(const HermitianMatrix& b, double a) {
  if (a <= 0.0) throw BadShape("beta_rate_asymmetric: need a > 0");
  RealVec ev;
  if (!inside_open_unit_interval(b, &ev)) return kInf;
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) logdet += std::log(1.0 - ev(i));
  return -a * logdet;
}

double scaled_wishart_rate(const HermitianMatrix& x) {
  RealVec ev = hermitian_eigenvalues(x.mat());
  double scale = std::max(std::abs(ev(ev.size() - 1)), 1.0);
  if (ev(0) < -kRelTol * scale) return kInf;
  return x.mat().trace().real();
}

double wishart_laplace(const HermitianMatrix& k, double a) {
  if (a <= 0.0) throw BadShape("wishart_laplace: need a > 0");
  RealVec ev = hermitian_eigenvalues(k.mat());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double v = 1.0 - ev(i);
    if (v <= kRelTol) return kInf;
    sum += std::log(v);
  }
  return -a * sum;
}

SampleBatch sample_batch(const std::string& ensemble, const EnsembleParams& params, int count,
                         RngStream stream) {
  SampleBatch batch{ensemble, params, stream, {}};
  batch.draws.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng = stream.substream(static_cast<std::uint64_t>(i)).engine();
    if (ensemble == "ginibre") {
      batch.draws.push_back(sample_ginibre(params.p, rng));
    } else if (ensemble == "gue") {
      batch.draws.push_back(sample_gue(params.p, rng).mat());
    } else if (ensemble == "haar") {
      batch.draws.push_back(sample_haar_unitary(params.p, rng));
    } else if (ensemble == "wishart") {
      batch.draws.push_back(sample_complex_wishart(params.p, params.a, rng).mat());
    } else if (ensemble == "beta") {
      batch.draws.push_back(sample_matrix_beta(params.p, params.a, params.b, rng).mat());
    } else if (ensemble == "haar-subblock") {
      batch.draws.push_back(haar_subblock(params.p, params.k, rng));
    } else if (ensemble == "canonical-interval") {
      auto u = sample_uniform_canonical_interval(params.n, params.p, rng);
      for (auto& m : u.canon) batch.draws.push_back(m.mat());
    } else if (ensemble == "canonical-circle") {
      auto a = sample_uniform_canonical_circle(params.n, params.p, rng);
      for (auto& m : a.canon) batch.draws.push_back(std::move(m));
    } else {
      throw ConfigError("unknown ensemble: " + ensemble);
    }
  }
  return batch;
}

}  // namespace matmom
