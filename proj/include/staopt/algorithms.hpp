#ifndef STAOPT_ALGORITHMS_HPP
#define STAOPT_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staopt/core.hpp"
#include "staopt/nm_simplex.hpp"
#include "staopt/posta.hpp"

namespace staopt {

enum class Variant { POSTA, NM_POSTA, QI_POSTA, NMQI_POSTA };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct VariantConfig {
  Variant variant = Variant::POSTA;
  std::size_t se = 50;
  std::size_t tp = 10;
  double ur_threshold = 0.5;
  double aas_threshold = 1e-6;
  NmCoefficients nm_coeffs{};
  double beta = 1.0;
  OmegaSet omega = OmegaSet::standard();
  std::uint64_t seed = 0;
  std::optional<Point> start;  // fixed starting point; random within bounds when absent
  bool record_path = false;    // keep best-point coordinates for path traces
};

enum class TerminationCause { OptimumFound, BudgetExhausted };

std::string to_string(TerminationCause c);

/// Per-run result. The trace samples (FE count, best fitness) at every strict
/// improvement, so its fitnesses are strictly decreasing and FE counts
/// strictly increasing.
struct RunRecord {
  std::vector<std::pair<long long, double>> trace;
  Solution final;
  long long total_fes = 0;
  TerminationCause terminated_by = TerminationCause::BudgetExhausted;
  bool success = false;
  std::vector<Point> path;  // filled only when record_path is set
};

struct RunControls {
  long long budget = 0;
  double term_eps = 0.0;      // optimum-found test: |best - target| <= term_eps
  double success_eps = 1e-8;  // success test on the final solution
};

/// Uniform random point within the bounds, evaluated.
Solution initial_point(const ObjectiveFunction& f, RngStream& rng, EvalCounter& counter);

/// Execute one variant run to termination (optimum found or budget spent).
RunRecord run(const ObjectiveFunction& f, const VariantConfig& cfg, const RunControls& ctl);

}  // namespace staopt

#endif
