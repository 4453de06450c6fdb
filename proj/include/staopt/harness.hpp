#ifndef STAOPT_HARNESS_HPP
#define STAOPT_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "staopt/algorithms.hpp"
#include "staopt/core.hpp"

namespace staopt {

/// FE budget for dimension D: floor(5000 * D * ln D).
long long fe_budget(std::size_t dim);

std::optional<TerminationCause> is_terminated(const Solution& best, const ObjectiveFunction& f,
                                              const EvalCounter& counter, double term_eps);

/// Success test on a finished run: |final fitness - target| <= epsilon.
bool is_success(const RunRecord& record, double target, double epsilon);

/// Mean/std of final fitnesses (sample std, n-1 denominator), average FEs and
/// success count over a cell's runs.
struct SummaryStats {
  double mean = 0.0;
  double std_dev = 0.0;
  double ave_fes = 0.0;
  int success_count = 0;
  int runs = 0;
};

SummaryStats summarize(const std::vector<RunRecord>& records);

enum class RankSumOutcome { Better, Worse, Similar };

std::string to_string(RankSumOutcome o);

/// Two-sided Wilcoxon rank-sum test of a against reference b, midrank ties.
/// Exact permutation distribution for n+m <= 20, normal approximation with
/// tie correction and continuity correction otherwise. For minimization data,
/// Better means a's values are significantly lower than b's.
RankSumOutcome rank_sum_test(const std::vector<double>& a, const std::vector<double>& b,
                             double alpha);

/// Same test, exposing the two-sided p-value.
RankSumOutcome rank_sum_test(const std::vector<double>& a, const std::vector<double>& b,
                             double alpha, double& p_value);

struct FunctionCase {
  std::string id;
  std::size_t dim = 2;
};

struct ExperimentConfig {
  std::vector<FunctionCase> functions;
  std::vector<VariantConfig> variants;
  int repetitions = 30;
  std::optional<long long> budget;  // fe_budget(D) when absent
  double success_epsilon = 1e-8;
  double termination_epsilon = 0.0;
  std::uint64_t base_seed = 0;
  std::string output_dir = ".";
  std::optional<std::string> reference_variant;  // significance column reference
  std::size_t workers = 0;                       // 0 = hardware concurrency
  bool write_curves = true;
};

/// Built-in CI-speed profile: 10 repetitions, D in {2, 20}.
ExperimentConfig quick_profile();

struct CellResult {
  FunctionCase function;
  std::string variant;
  SummaryStats stats;
  std::vector<RunRecord> records;
  std::string significance;  // vs reference variant; empty when not applicable
  std::string error;         // per-cell failure, empty on success
};

struct ExperimentResult {
  std::vector<CellResult> cells;
  double wall_seconds = 0.0;
};

/// Run the full (function x variant x seed) matrix with seeds base_seed+i and
/// write summary.csv, per-cell curve CSVs and metadata.json into output_dir.
/// Deterministic given the config, regardless of worker scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace staopt

#endif
