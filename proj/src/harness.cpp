#include "staopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "staopt/benchmarks.hpp"

namespace staopt {

long long fe_budget(std::size_t dim) {
  return static_cast<long long>(
      std::floor(5000.0 * static_cast<double>(dim) * std::log(static_cast<double>(dim))));
}

std::optional<TerminationCause> is_terminated(const Solution& best, const ObjectiveFunction& f,
                                              const EvalCounter& counter, double term_eps) {
  if (f.target_value && std::fabs(best.fitness - *f.target_value) <= term_eps) {
    return TerminationCause::OptimumFound;
  }
  if (counter.exhausted()) return TerminationCause::BudgetExhausted;
  return std::nullopt;
}

bool is_success(const RunRecord& record, double target, double epsilon) {
  return std::fabs(record.final.fitness - target) <= epsilon;
}

SummaryStats summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw EmptyInput("summarize");
  SummaryStats s;
  s.runs = static_cast<int>(records.size());
  double sum = 0.0;
  double fes = 0.0;
  for (const auto& r : records) {
    sum += r.final.fitness;
    fes += static_cast<double>(r.total_fes);
    s.success_count += r.success ? 1 : 0;
  }
  s.mean = sum / s.runs;
  s.ave_fes = fes / s.runs;
  if (s.runs > 1) {
    double acc = 0.0;
    for (const auto& r : records) {
      const double d = r.final.fitness - s.mean;
      acc += d * d;
    }
    s.std_dev = std::sqrt(acc / (s.runs - 1));
  }
  return s;
}

std::string to_string(RankSumOutcome o) {
  switch (o) {
    case RankSumOutcome::Better:
      return "+";
    case RankSumOutcome::Worse:
      return "-";
    default:
      return "~";
  }
}

namespace {

// Midranks of the pooled samples, in pooled order (a first, then b).
std::vector<double> midranks(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size(), total = n + b.size();
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
  std::vector<double> ranks(total);
  std::size_t i = 0;
  while (i < total) {
    std::size_t j = i;
    while (j + 1 < total && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

double exact_two_sided_p(const std::vector<double>& ranks, std::size_t n, double w_obs) {
  const std::size_t total = ranks.size();
  const double mu = std::accumulate(ranks.begin(), ranks.end(), 0.0) *
                    static_cast<double>(n) / static_cast<double>(total);
  const double threshold = std::fabs(w_obs - mu) - 1e-9;

  std::vector<char> mask(total, 0);
  std::fill(mask.end() - static_cast<long>(n), mask.end(), 1);
  long long extreme = 0, count = 0;
  do {
    double w = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
      if (mask[i]) w += ranks[i];
    }
    if (std::fabs(w - mu) >= threshold) ++extreme;
    ++count;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return static_cast<double>(extreme) / static_cast<double>(count);
}

double normal_two_sided_p(const std::vector<double>& ranks, std::size_t n, double w_obs) {
  const std::size_t total = ranks.size();
  const std::size_t m = total - n;
  const double nn = static_cast<double>(n), mm = static_cast<double>(m),
               tot = static_cast<double>(total);
  const double mu = nn * (tot + 1.0) / 2.0;

  // Tie correction from tie-group sizes.
  std::vector<double> sorted(ranks);
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  const double var =
      nn * mm / 12.0 * ((tot + 1.0) - tie_term / (tot * (tot - 1.0)));
  if (var <= 0.0) return 1.0;
  const double z = std::max(0.0, std::fabs(w_obs - mu) - 0.5) / std::sqrt(var);
  return std::erfc(z / M_SQRT2);
}

}  // namespace

RankSumOutcome rank_sum_test(const std::vector<double>& a, const std::vector<double>& b,
                             double alpha, double& p_value) {
  const std::vector<double> ranks = midranks(a, b);
  const std::size_t n = a.size(), total = ranks.size();
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i) w += ranks[i];
  const double mu = static_cast<double>(n) * (static_cast<double>(total) + 1.0) / 2.0;

  p_value = (total <= 20) ? exact_two_sided_p(ranks, n, w) : normal_two_sided_p(ranks, n, w);
  if (p_value > alpha || w == mu) return RankSumOutcome::Similar;
  // Lower values are better for minimization data.
  return (w < mu) ? RankSumOutcome::Better : RankSumOutcome::Worse;
}

RankSumOutcome rank_sum_test(const std::vector<double>& a, const std::vector<double>& b,
                             double alpha) {
  double p = 1.0;
  return rank_sum_test(a, b, alpha, p);
}

ExperimentConfig quick_profile() {
  ExperimentConfig cfg;
  cfg.repetitions = 10;
  for (const auto& spec : benchmark_specs()) {
    cfg.functions.push_back(FunctionCase{spec.id, 2});
    cfg.functions.push_back(FunctionCase{spec.id, 20});
  }
  VariantConfig v;
  for (Variant kind :
       {Variant::POSTA, Variant::NM_POSTA, Variant::QI_POSTA, Variant::NMQI_POSTA}) {
    v.variant = kind;
    cfg.variants.push_back(v);
  }
  return cfg;
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_curves(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
  std::ofstream out(path);
  out << "run,fe,best_fitness\n";
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    for (const auto& [fe, fit] : rec.trace) {
      out << r << "," << fe << "," << fmt_double(fit) << "\n";
    }
    // Terminal sample so the step curve extends to the end of the run.
    if (rec.trace.empty() || rec.trace.back().first != rec.total_fes) {
      out << r << "," << rec.total_fes << "," << fmt_double(rec.final.fitness) << "\n";
    }
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();

  ExperimentResult result;
  for (const auto& fc : cfg.functions) {
    for (const auto& vc : cfg.variants) {
      CellResult cell;
      cell.function = fc;
      cell.variant = to_string(vc.variant);
      cell.records.resize(cfg.repetitions);
      result.cells.push_back(std::move(cell));
    }
  }

  struct Task {
    std::size_t cell;
    int rep;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < result.cells.size(); ++c) {
    for (int r = 0; r < cfg.repetitions; ++r) tasks.push_back(Task{c, r});
  }

  const std::size_t n_variants = cfg.variants.size();
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task t = tasks[i];
      CellResult& cell = result.cells[t.cell];
      try {
        ObjectiveFunction f = make_benchmark(cell.function.id, cell.function.dim);
        VariantConfig vc = cfg.variants[t.cell % n_variants];
        vc.seed = cfg.base_seed + static_cast<std::uint64_t>(t.rep);
        RunControls ctl;
        ctl.budget = cfg.budget.value_or(fe_budget(cell.function.dim));
        ctl.term_eps = cfg.termination_epsilon;
        ctl.success_eps = cfg.success_epsilon;
        cell.records[t.rep] = run(f, vc, ctl);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (cell.error.empty()) cell.error = e.what();
      }
    }
  };

  std::size_t n_workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
  n_workers = std::max<std::size_t>(1, std::min(n_workers, tasks.size()));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& cell : result.cells) {
    if (cell.error.empty()) cell.stats = summarize(cell.records);
  }

  // Significance vs the reference variant, per function cell.
  if (cfg.reference_variant) {
    for (auto& cell : result.cells) {
      if (cell.variant == *cfg.reference_variant || !cell.error.empty()) continue;
      const CellResult* ref = nullptr;
      for (const auto& other : result.cells) {
        if (other.variant == *cfg.reference_variant &&
            other.function.id == cell.function.id &&
            other.function.dim == cell.function.dim && other.error.empty()) {
          ref = &other;
          break;
        }
      }
      if (ref == nullptr) continue;
      auto finals = [](const CellResult& c) {
        std::vector<double> v;
        for (const auto& r : c.records) v.push_back(r.final.fitness);
        return v;
      };
      cell.significance = to_string(rank_sum_test(finals(cell), finals(*ref), 0.05));
    }
  }

  namespace fs = std::filesystem;
  const fs::path out_dir(cfg.output_dir);
  fs::create_directories(out_dir);

  {
    std::ofstream out(out_dir / "summary.csv");
    out << "function,D,variant,mean,std,ave_fes,success,runs,significance\n";
    for (const auto& cell : result.cells) {
      out << cell.function.id << "," << cell.function.dim << "," << cell.variant << ","
          << fmt_double(cell.stats.mean) << "," << fmt_double(cell.stats.std_dev) << ","
          << fmt_double(cell.stats.ave_fes) << "," << cell.stats.success_count << ","
          << cell.stats.runs << "," << cell.significance << "\n";
    }
  }

  if (cfg.write_curves) {
    for (const auto& cell : result.cells) {
      if (!cell.error.empty()) continue;
      const std::string name = "curves_" + cell.function.id + "_D" +
                               std::to_string(cell.function.dim) + "_" + cell.variant + ".csv";
      write_curves(out_dir / name, cell.records);
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  result.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

  {
    nlohmann::json meta;
    meta["library"] = "staopt 0.1.0";
    meta["repetitions"] = cfg.repetitions;
    meta["base_seed"] = cfg.base_seed;
    meta["success_epsilon"] = cfg.success_epsilon;
    meta["termination_epsilon"] = cfg.termination_epsilon;
    meta["std_convention"] = "sample (n-1)";
    if (cfg.budget) meta["budget"] = *cfg.budget;
    if (cfg.reference_variant) meta["reference_variant"] = *cfg.reference_variant;
    nlohmann::json fns = nlohmann::json::array();
    for (const auto& fc : cfg.functions) fns.push_back({{"id", fc.id}, {"D", fc.dim}});
    meta["functions"] = fns;
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& vc : cfg.variants) vars.push_back(to_string(vc.variant));
    meta["variants"] = vars;
    nlohmann::json seeds = nlohmann::json::array();
    for (int i = 0; i < cfg.repetitions; ++i) seeds.push_back(cfg.base_seed + i);
    meta["seeds"] = seeds;
    meta["wall_seconds"] = result.wall_seconds;
    std::ofstream out(out_dir / "metadata.json");
    out << meta.dump(2) << "\n";
  }

  return result;
}

}  // namespace staopt
