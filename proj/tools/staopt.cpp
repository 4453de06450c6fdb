#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "staopt/benchmarks.hpp"
#include "staopt/config.hpp"
#include "staopt/harness.hpp"

namespace {

using namespace staopt;

std::string default_output() {
  if (const char* env = std::getenv("STAOPT_OUTPUT")) return env;
  return ".";
}

void print_record(const ObjectiveFunction& f, const VariantConfig& vc, const RunRecord& rec) {
  std::printf("function      %s (D=%zu)\n", f.name.c_str(), f.dimension);
  std::printf("variant       %s\n", to_string(vc.variant).c_str());
  std::printf("seed          %llu\n", static_cast<unsigned long long>(vc.seed));
  std::printf("final fitness %.17g\n", rec.final.fitness);
  std::printf("total FEs     %lld\n", rec.total_fes);
  std::printf("terminated    %s\n", to_string(rec.terminated_by).c_str());
  std::printf("success       %s\n", rec.success ? "yes" : "no");
  std::printf("improvements  %zu\n", rec.trace.size());
}

int cmd_run(const std::string& function, std::size_t dim, const std::string& variant,
            std::uint64_t seed, long long budget, double epsilon, double term_eps) {
  ObjectiveFunction f = make_benchmark(function, dim);
  VariantConfig vc;
  vc.variant = variant_from_string(variant);
  vc.seed = seed;
  RunControls ctl;
  ctl.budget = budget > 0 ? budget : fe_budget(dim);
  ctl.success_eps = epsilon;
  ctl.term_eps = term_eps;
  RunRecord rec = run(f, vc, ctl);
  print_record(f, vc, rec);
  return 0;
}

int run_matrix(const ExperimentConfig& cfg) {
  if (cfg.functions.empty()) throw ConfigError("no functions configured");
  if (cfg.variants.empty()) throw ConfigError("no variants configured");
  ExperimentResult res = run_experiment(cfg);
  std::printf("%-6s %-4s %-12s %-13s %-11s %-8s %s\n", "func", "D", "variant", "mean", "ave_fes",
              "success", "sig");
  for (const auto& cell : res.cells) {
    if (!cell.error.empty()) {
      std::printf("%-6s %-4zu %-12s ERROR: %s\n", cell.function.id.c_str(), cell.function.dim,
                  cell.variant.c_str(), cell.error.c_str());
      continue;
    }
    std::printf("%-6s %-4zu %-12s %-13.3e %-11.3e %2d/%-5d %s\n", cell.function.id.c_str(),
                cell.function.dim, cell.variant.c_str(), cell.stats.mean, cell.stats.ave_fes,
                cell.stats.success_count, cell.stats.runs, cell.significance.c_str());
  }
  std::printf("outputs written to %s (%.1fs)\n", cfg.output_dir.c_str(), res.wall_seconds);
  bool any_error = false;
  for (const auto& cell : res.cells) any_error = any_error || !cell.error.empty();
  return any_error ? 1 : 0;
}

int cmd_demo(const std::string& function, const std::string& variant, std::uint64_t seed,
             const std::string& output, double epsilon) {
  ObjectiveFunction f = make_benchmark(function, 2);
  VariantConfig vc;
  vc.variant = variant_from_string(variant);
  vc.seed = seed;
  vc.start = Point{0.0, 0.75};
  vc.record_path = true;
  RunControls ctl;
  ctl.budget = 2000000;  // the path demo runs without the dimension budget cap
  ctl.term_eps = epsilon;
  ctl.success_eps = epsilon;
  RunRecord rec = run(f, vc, ctl);
  print_record(f, vc, rec);

  namespace fs = std::filesystem;
  fs::create_directories(output);
  const fs::path path = fs::path(output) / ("path_" + function + "_" +
                                            to_string(vc.variant) + ".csv");
  std::ofstream out(path);
  out << "fe,x1,x2,best_fitness\n";
  for (std::size_t i = 0; i < rec.trace.size(); ++i) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g\n", rec.trace[i].first,
                  rec.path[i][0], rec.path[i][1], rec.trace[i].second);
    out << buf;
  }
  std::printf("solution path written to %s\n", path.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"POSTA-family derivative-free optimizer and benchmark harness"};
  app.require_subcommand(1);

  std::string function = "F6";
  std::vector<std::string> functions;
  std::size_t dim = 2;
  std::string variant = "NMQI_POSTA";
  std::vector<std::string> variants;
  std::uint64_t seed = 0;
  int reps = 0;
  long long budget = 0;
  double epsilon = 1e-8;
  double term_eps = 0.0;
  std::string output = default_output();
  std::string config_path;
  std::vector<std::string> overrides;
  std::size_t workers = 0;
  std::string reference;

  auto* cmd_run_app = app.add_subcommand("run", "Execute a single run and print the record");
  cmd_run_app->add_option("--function", function, "Benchmark id (F1..F14)");
  cmd_run_app->add_option("--dim", dim, "Dimension D");
  cmd_run_app->add_option("--variant", variant, "POSTA|NM_POSTA|QI_POSTA|NMQI_POSTA");
  cmd_run_app->add_option("--seed", seed, "Random seed");
  cmd_run_app->add_option("--budget", budget, "FE budget (default 5000*D*ln D)");
  cmd_run_app->add_option("--epsilon", epsilon, "Success epsilon");
  cmd_run_app->add_option("--term-epsilon", term_eps, "Termination epsilon");

  auto* cmd_bench = app.add_subcommand("bench", "Execute an experiment matrix");
  auto* cmd_compare =
      app.add_subcommand("compare", "Run >=2 variants and report rank-sum significance");
  for (CLI::App* c : {cmd_bench, cmd_compare}) {
    c->add_option("--config", config_path, "Config file (key = value with [experiment] section)");
    c->add_option("--set", overrides, "Config overrides, key=value");
    c->add_option("--function", functions, "Benchmark id, ID or ID:D (repeatable)");
    c->add_option("--dim", dim, "Default dimension for --function without :D");
    c->add_option("--variant", variants, "Variant name (repeatable)");
    c->add_option("--seed", seed, "Base seed");
    c->add_option("--reps", reps, "Repetitions per cell");
    c->add_option("--budget", budget, "FE budget override");
    c->add_option("--epsilon", epsilon, "Success epsilon");
    c->add_option("--term-epsilon", term_eps, "Termination epsilon");
    c->add_option("--output", output, "Output directory");
    c->add_option("--workers", workers, "Worker threads (0 = all cores)");
    c->add_option("--reference", reference, "Reference variant for the significance column");
  }

  auto* cmd_demo_app = app.add_subcommand("demo", "2-D solution-path demo from (0, 0.75)");
  cmd_demo_app->add_option("--function", function, "F3 or F7");
  cmd_demo_app->add_option("--variant", variant, "Variant name");
  cmd_demo_app->add_option("--seed", seed, "Random seed");
  cmd_demo_app->add_option("--epsilon", epsilon, "Success/termination epsilon");
  cmd_demo_app->add_option("--output", output, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run_app->parsed()) {
      return cmd_run(function, dim, variant, seed, budget, epsilon, term_eps);
    }
    if (cmd_demo_app->parsed()) {
      return cmd_demo(function, variant, seed, output, epsilon);
    }

    ConfigMap map;
    if (!config_path.empty()) map = parse_config_file(config_path);
    apply_overrides(map, overrides);
    ExperimentConfig cfg = build_experiment_config(map);
    // Flags override file values.
    for (const auto& item : functions) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        cfg.functions.push_back(FunctionCase{item, dim});
      } else {
        cfg.functions.push_back(
            FunctionCase{item.substr(0, colon),
                         static_cast<std::size_t>(std::stoll(item.substr(colon + 1)))});
      }
    }
    for (const auto& name : variants) {
      VariantConfig vc;
      vc.variant = variant_from_string(name);
      cfg.variants.push_back(vc);
    }
    if (reps > 0) cfg.repetitions = reps;
    if (seed != 0) cfg.base_seed = seed;
    if (budget > 0) cfg.budget = budget;
    if (!reference.empty()) cfg.reference_variant = reference;
    if (workers != 0) cfg.workers = workers;
    if (output != ".") cfg.output_dir = output;
    cfg.success_epsilon = epsilon;
    cfg.termination_epsilon = term_eps;

    if (cmd_compare->parsed()) {
      if (cfg.variants.size() < 2) throw ConfigError("compare needs at least two variants");
      if (!cfg.reference_variant) {
        cfg.reference_variant = to_string(cfg.variants.back().variant);
      }
    }
    // Validate ids before spending any compute.
    for (const auto& fc : cfg.functions) (void)make_benchmark(fc.id, fc.dim);
    return run_matrix(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownId& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
