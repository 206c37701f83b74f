#pragma once

#include <map>
#include <string>
#include <vector>

#include "matmom/ensembles.hpp"
#include "matmom/matrix.hpp"

namespace matmom {

struct ExperimentConfig {
  std::string experiment = "all";
  int p = 2;
  int n = 4096;
  int k = 2;
  long long sample_count = 100000;
  std::uint64_t seed = 82017;
  std::string out_dir;
  std::map<std::string, double> overrides;

  double tolerance(const std::string& name, double fallback) const;
  void validate_statistical() const;  // N >= 10^3, k <= n
};

/// One named check: |observed - target| <= threshold.
struct StatisticCheck {
  std::string name;
  double observed = 0.0;
  double target = 0.0;
  double threshold = 0.0;
  bool pass = false;

  double gap() const;
};

/// One (n, statistic) row of a convergence table.
struct ConvergenceRow {
  std::string experiment;
  long long n = 0;
  std::string statistic;
  double observed = 0.0;
  double target = 0.0;
  double gap = 0.0;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<StatisticCheck> checks;
  std::vector<ConvergenceRow> rows;
  double runtime_seconds = 0.0;  // the only nondeterministic field

  bool pass() const;
  StatisticCheck& add(const std::string& name, double observed, double target, double threshold);
};

/// Beta_p(a_n, a_n) rescaled by sqrt(8 a_n) against GUE entry statistics.
ExperimentReport clt_beta_gue_check(const ExperimentConfig& cfg);

/// Beta_p(c, a_n) rescaled by a_n against Wishart W_p(c) moments.
ExperimentReport clt_beta_wishart_check(const ExperimentConfig& cfg);

/// Rescaled circle canonical moments and trigonometric moments against
/// Ginibre entry statistics, plus the A-vs-Gamma linearization gap.
ExperimentReport clt_trig_ginibre_check(const ExperimentConfig& cfg);

/// Wishart law of large numbers and CLT (W_n/a_n -> I, rescaled -> GUE).
ExperimentReport wishart_limit_check(const ExperimentConfig& cfg);

/// Deterministic gap between -(1/n) log density and the closed-form rate,
/// over n = 2^6 .. 2^12, on both moment spaces.
ExperimentReport ldp_density_scaling_check(const ExperimentConfig& cfg);

/// Monotone growth of partial moment rates toward the measure-level rate
/// for Jacobi-type densities and their block-diagonal embeddings.
ExperimentReport measure_rate_monotonicity_check(const ExperimentConfig& cfg);

/// Szego triple identity across a corpus of finite parameter sequences.
ExperimentReport szego_consistency_check(const ExperimentConfig& cfg);

struct SuiteResult {
  std::vector<ExperimentReport> reports;
  bool all_pass() const;
};

/// Runs a suite ("clt", "ldp", "measure", "szego" or "all"); when out_dir
/// is set, writes per-experiment JSON reports and one convergence CSV.
SuiteResult run_suite(const ExperimentConfig& base, const std::string& suite);

ExperimentConfig load_config(const std::string& path);
std::string report_to_json_text(const ExperimentReport& report);
void write_reports(const SuiteResult& result, const std::string& out_dir);

/// Monic three-term recurrence coefficients of the Jacobi weight
/// (1-x)^alpha x^beta on [0,1]: returns {diag alpha_k, offdiag beta_k}.
std::pair<std::vector<double>, std::vector<double>> jacobi_recurrence_coeffs(double alpha,
                                                                             double beta, int k);

/// Scalar canonical moments recovered from recurrence coefficients through
/// the zeta decomposition; stable at depths where raw Hankel solves are not.
std::vector<double> canonical_moments_from_recurrence(const std::vector<double>& diag,
                                                      const std::vector<double>& offdiag);

}  // namespace matmom
