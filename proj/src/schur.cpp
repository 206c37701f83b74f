#include "matmom/schur.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace matmom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_abs_det(const Mat& m) {
  Eigen::PartialPivLU<Mat> lu(m);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) sum += std::log(std::abs(lu.matrixLU()(i, i)));
  return sum;
}

// log det of I - f^*f via singular values; -inf at the contraction boundary.
double log_det_defect(const Mat& f) {
  RealVec ev = hermitian_eigenvalues(f.adjoint() * f);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double v = 1.0 - ev(i);
    if (v <= 0.0) return -kInf;
    sum += std::log(v);
  }
  return sum;
}

}  // namespace

CaratheodoryCoefficients caratheodory_coeffs(const TrigMomentVector& g) {
  CaratheodoryCoefficients c;
  c.p = g.p;
  c.coeffs.reserve(g.order());
  for (const auto& gamma : g.moments) c.coeffs.push_back(gamma.adjoint());
  return c;
}

Mat caratheodory_eval(const DiscreteMatrixMeasure& mu, Cplx z) {
  if (std::abs(z) > 1.0 - 1e-6) {
    throw TooCloseToBoundary("caratheodory_eval: |z| must stay below 1 - 1e-6");
  }
  Mat f = Mat::Zero(mu.p, mu.p);
  for (const auto& atom : mu.atoms) {
    Cplx e = std::polar(1.0, atom.location);
    f += ((e + z) / (e - z)) * atom.weight.mat();
  }
  return f;
}

Mat caratheodory_eval(const DensityGridMeasure& mu, Cplx z) {
  if (std::abs(z) > 1.0 - 1e-6) {
    throw TooCloseToBoundary("caratheodory_eval: |z| must stay below 1 - 1e-6");
  }
  Mat f = Mat::Zero(mu.p, mu.p);
  for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
    Cplx e = std::polar(1.0, mu.nodes[i]);
    f += mu.quadrature_weights[i] * ((e + z) / (e - z)) * mu.values[i].mat();
  }
  if (mu.singular_mass) {
    for (const auto& atom : mu.singular_mass->atoms) {
      Cplx e = std::polar(1.0, atom.location);
      f += ((e + z) / (e - z)) * atom.weight.mat();
    }
  }
  return f;
}

Mat schur_value_from_caratheodory(const Mat& f_big, Cplx z) {
  check_square(f_big);
  const int p = static_cast<int>(f_big.rows());
  Mat denom = f_big + Mat::Identity(p, p);
  Eigen::PartialPivLU<Mat> lu(denom);
  if (std::abs(lu.determinant()) < 1e-14) {
    throw NonInvertible("schur_value_from_caratheodory: F + I is singular");
  }
  if (std::abs(z) < 1e-14) {
    throw NonInvertible("schur_value_from_caratheodory: z = 0 needs the series limit");
  }
  return (1.0 / z) * (f_big - Mat::Identity(p, p)) * lu.inverse();
}

Mat caratheodory_value_from_schur(const Mat& f, Cplx z) {
  check_square(f);
  const int p = static_cast<int>(f.rows());
  Mat denom = Mat::Identity(p, p) - z * f;
  Eigen::PartialPivLU<Mat> lu(denom);
  if (std::abs(lu.determinant()) < 1e-14) {
    throw NonInvertible("caratheodory_value_from_schur: I - zf is singular");
  }
  return (Mat::Identity(p, p) + z * f) * lu.inverse();
}

Mat schur_eval_from_measure(const DiscreteMatrixMeasure& mu, Cplx z) {
  if (std::abs(z) > 1e-8) {
    return schur_value_from_caratheodory(caratheodory_eval(mu, z), z);
  }
  // Removable singularity at the origin: Richardson step f(0) ~ 2f(h) - f(2h).
  const double h = 1e-4;
  Mat f1 = schur_value_from_caratheodory(caratheodory_eval(mu, Cplx(h, 0.0)), Cplx(h, 0.0));
  Mat f2 =
      schur_value_from_caratheodory(caratheodory_eval(mu, Cplx(2 * h, 0.0)), Cplx(2 * h, 0.0));
  return 2.0 * f1 - f2;
}

Mat schur_eval_from_params(const SchurParameterSequence& a, Cplx z) {
  const int p = a.p;
  if (std::abs(z) > 1.0 + 1e-12) throw BadShape("schur_eval_from_params: need |z| <= 1");
  Mat f = Mat::Zero(p, p);  // f_n of the zero-extended sequence
  for (int k = a.order(); k >= 1; --k) {
    const Mat& ak = a.canon[k - 1];
    if (!is_strict_contraction(ak)) {
      throw NotStrictContraction("schur_eval_from_params: parameter not a strict contraction");
    }
    Mat br_inv =
        inv_sqrt(PsdMatrix(hermitize(Mat::Identity(p, p) - ak.adjoint() * ak))).mat();
    Mat bl = hermitian_sqrt(PsdMatrix(hermitize(Mat::Identity(p, p) - ak * ak.adjoint()))).mat();
    Mat denom = Mat::Identity(p, p) + z * ak * f;
    Eigen::PartialPivLU<Mat> lu(denom);
    f = br_inv * (z * f + ak.adjoint()) * lu.inverse() * bl;
  }
  return f;
}

std::pair<PsdMatrix, PsdMatrix> defect_matrices(const Mat& a) {
  check_square(a);
  if (!is_contraction(a)) throw NotContraction("defect_matrices: input is not a contraction");
  const int p = static_cast<int>(a.rows());
  Mat right = hermitize(Mat::Identity(p, p) - a.adjoint() * a);
  Mat left = hermitize(Mat::Identity(p, p) - a * a.adjoint());
  return {hermitian_sqrt(PsdMatrix(right)), hermitian_sqrt(PsdMatrix(left))};
}

SchurTaylorCoefficients schur_taylor_from_params(const SchurParameterSequence& a) {
  const int p = a.p;
  const int n = a.order();
  for (const auto& ak : a.canon) {
    if (!is_strict_contraction(ak)) {
      throw NotStrictContraction("schur_taylor_from_params: parameter not a strict contraction");
    }
  }
  // levels[l][m] holds G_m of the Schur function with parameters A_{l+1}...
  // Levels are filled bottom-up; level l needs orders up to n-1-l, and the
  // missing tail parameters are irrelevant by triangularity (G_m depends
  // only on A_1..A_{m+1}), so the sequence is padded with zeros.
  std::vector<std::vector<Mat>> levels(n + 1);
  auto param = [&](int level) -> Mat {
    return (level < n) ? a.canon[level] : Mat::Zero(p, p);
  };
  for (int l = n; l >= 0; --l) {
    int orders = n - l;
    if (l == n) continue;
    levels[l].resize(orders < 1 ? 1 : orders);
    Mat a1 = param(l);
    auto [b_right, b_left] = defect_matrices(a1);
    Mat br_inv = inv_sqrt(PsdMatrix(hermitize(Mat::Identity(p, p) - a1.adjoint() * a1))).mat();
    Mat bl_inv = inv_sqrt(PsdMatrix(hermitize(Mat::Identity(p, p) - a1 * a1.adjoint()))).mat();
    levels[l][0] = a1.adjoint();
    for (int m = 1; m < orders; ++m) {
      Mat sum = br_inv * levels[l + 1][m - 1];
      for (int j = 0; j <= m - 1; ++j) {
        sum -= levels[l][j] * bl_inv * a1 * levels[l + 1][m - 1 - j];
      }
      levels[l][m] = sum * b_left.mat();
    }
  }
  SchurTaylorCoefficients g;
  g.p = p;
  if (n == 0) return g;
  g.coeffs.assign(levels[0].begin(), levels[0].begin() + n);
  return g;
}

std::vector<Mat> fourier_taylor_coeffs(const std::function<Mat(Cplx)>& f, int p, double radius,
                                       int num_samples, int num_coeffs) {
  if (radius <= 0.0 || radius > 0.5) throw BadShape("fourier_taylor_coeffs: need 0 < r <= 1/2");
  if (num_samples < 64 || num_coeffs > num_samples) {
    throw BadShape("fourier_taylor_coeffs: need at least 64 samples covering the coefficients");
  }
  std::vector<Mat> samples;
  samples.reserve(num_samples);
  for (int j = 0; j < num_samples; ++j) {
    double phi = 2.0 * std::numbers::pi * j / num_samples;
    samples.push_back(f(std::polar(radius, phi)));
  }
  std::vector<Mat> coeffs;
  coeffs.reserve(num_coeffs);
  for (int k = 0; k < num_coeffs; ++k) {
    Mat c = Mat::Zero(p, p);
    for (int j = 0; j < num_samples; ++j) {
      double phi = 2.0 * std::numbers::pi * j * k / num_samples;
      c += samples[j] * std::polar(1.0, -phi);
    }
    coeffs.push_back(Mat(c / (num_samples * std::pow(radius, k))));
  }
  return coeffs;
}

bool contraction_toeplitz_test(const SchurTaylorCoefficients& g) {
  const int p = g.p;
  const int n = static_cast<int>(g.coeffs.size());
  if (n == 0) return true;
  Mat block = Mat::Zero(n * p, n * p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) block.block(i * p, j * p, p, p) = g.coeffs[i - j];
  return is_contraction(block);
}

BoundaryDensityGrid boundary_density_from_schur(const std::vector<double>& angles,
                                                const std::vector<Mat>& f_values) {
  if (angles.size() != f_values.size() || angles.empty()) {
    throw InconsistentInputs("boundary_density_from_schur: grid size mismatch");
  }
  const int p = static_cast<int>(f_values.front().rows());
  BoundaryDensityGrid grid;
  grid.p = p;
  grid.angles = angles;
  grid.densities.reserve(angles.size());
  grid.degenerate.resize(angles.size(), false);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const Mat& f = f_values[i];
    if (!is_contraction(f)) {
      throw NotContraction("boundary_density_from_schur: value is not a contraction");
    }
    Cplx e = std::polar(1.0, angles[i]);
    Mat denom = Mat::Identity(p, p) - e * f;
    Eigen::PartialPivLU<Mat> lu(denom);
    if (std::abs(lu.determinant()) < 1e-12) {
      throw NonInvertible("boundary_density_from_schur: I - e^{i theta} f singular at a node");
    }
    Mat inv = lu.inverse();
    Mat defect = Mat::Identity(p, p) - f.adjoint() * f;
    Mat w = hermitize(inv.adjoint() * defect * inv);
    RealVec ev = hermitian_eigenvalues(w);
    grid.degenerate[i] = ev(0) <= kRelTol * std::max(std::abs(ev(ev.size() - 1)), 1.0);
    grid.densities.emplace_back(w);
  }
  return grid;
}

double rate_caratheodory(const BoundaryDensityGrid& f_real_part) {
  const std::size_t m = f_real_part.angles.size();
  if (m < 8) throw GridTooCoarse("rate_caratheodory: need at least 8 nodes");
  const int p = f_real_part.p;
  double mean_logdet = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    RealVec ev = hermitian_eigenvalues(f_real_part.densities[i].mat());
    for (Eigen::Index j = 0; j < ev.size(); ++j) {
      if (ev(j) <= 0.0) return kInf;
      mean_logdet += std::log(ev(j)) / static_cast<double>(m);
    }
  }
  return -2.0 * p * mean_logdet;
}

double rate_schur(const std::vector<double>& angles, const std::vector<Mat>& f_values) {
  if (angles.size() != f_values.size()) throw InconsistentInputs("rate_schur: size mismatch");
  const std::size_t m = angles.size();
  if (m < 8) throw GridTooCoarse("rate_schur: need at least 8 nodes");
  const int p = static_cast<int>(f_values.front().rows());
  double mean_logdet = 0.0;
  for (const auto& f : f_values) {
    double v = log_det_defect(f);
    if (v == -kInf) return kInf;
    mean_logdet += v / static_cast<double>(m);
  }
  return -2.0 * p * mean_logdet;
}

double SzegoTriple::max_pairwise_gap() const {
  double third = schur_integral + jensen_correction;
  double g1 = std::abs(canonical_sum - entropy_integral);
  double g2 = std::abs(canonical_sum - third);
  double g3 = std::abs(entropy_integral - third);
  return std::max({g1, g2, g3});
}

SzegoTriple szego_triple_identity(const SchurParameterSequence& a, const BoundaryDensityGrid& w,
                                  const std::vector<Mat>& f_values) {
  const std::size_t m = w.angles.size();
  if (m != f_values.size() || m == 0) {
    throw InconsistentInputs("szego_triple_identity: grids must share the angular nodes");
  }
  if (w.p != a.p) throw InconsistentInputs("szego_triple_identity: dimension mismatch");
  SzegoTriple out{0.0, 0.0, 0.0, 0.0};
  for (const auto& ak : a.canon) {
    double v = log_det_defect(ak.adjoint());  // det(I - A A^*) = det(I - A^* A)
    if (v == -kInf) {
      out.canonical_sum = -kInf;
      break;
    }
    out.canonical_sum += v;
  }
  for (std::size_t i = 0; i < m; ++i) {
    RealVec ev = hermitian_eigenvalues(w.densities[i].mat());
    for (Eigen::Index j = 0; j < ev.size(); ++j) {
      out.entropy_integral +=
          (ev(j) > 0.0 ? std::log(ev(j)) : -kInf) / static_cast<double>(m);
    }
    out.schur_integral += log_det_defect(f_values[i]) / static_cast<double>(m);
    Cplx e = std::polar(1.0, w.angles[i]);
    Mat denom = Mat::Identity(w.p, w.p) - e * f_values[i];
    out.jensen_correction += -2.0 * log_abs_det(denom) / static_cast<double>(m);
  }
  return out;
}

}  // namespace matmom
