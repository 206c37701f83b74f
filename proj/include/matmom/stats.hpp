#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace matmom {

/// Streaming mean/variance (Welford).
class MomentAccumulator {
 public:
  void add(double x);
  long long count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;          // unbiased
  double std_error_of_mean() const;

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

/// Chi-square upper tail probability with k degrees of freedom.
double chi_square_sf(double x, double dof);

/// One-sample Kolmogorov-Smirnov statistic against a CDF; samples need not
/// be sorted.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic KS p-value for the statistic at sample size n.
double ks_pvalue(double statistic, std::size_t n);

/// Pearson chi-square GOF p-value for observed counts against expected counts.
double chi_square_gof_pvalue(const std::vector<double>& observed,
                             const std::vector<double>& expected);

}  // namespace matmom
