#include "staopt/algorithms.hpp"

#include <cmath>

#include "staopt/history.hpp"
#include "staopt/qi.hpp"

namespace staopt {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::POSTA:
      return "POSTA";
    case Variant::NM_POSTA:
      return "NM_POSTA";
    case Variant::QI_POSTA:
      return "QI_POSTA";
    default:
      return "NMQI_POSTA";
  }
}

Variant variant_from_string(const std::string& s) {
  if (s == "POSTA") return Variant::POSTA;
  if (s == "NM_POSTA" || s == "NM-POSTA") return Variant::NM_POSTA;
  if (s == "QI_POSTA" || s == "QI-POSTA") return Variant::QI_POSTA;
  if (s == "NMQI_POSTA" || s == "NMQI-POSTA") return Variant::NMQI_POSTA;
  throw UnknownId(s);
}

std::string to_string(TerminationCause c) {
  return c == TerminationCause::OptimumFound ? "OptimumFound" : "BudgetExhausted";
}

Solution initial_point(const ObjectiveFunction& f, RngStream& rng, EvalCounter& counter) {
  Point p(f.dimension);
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = f.bounds.lower[i] + rng.uniform01() * (f.bounds.upper[i] - f.bounds.lower[i]);
  }
  const double v = evaluate(f, p, counter);
  return Solution{std::move(p), v};
}

namespace {

struct OptimumFoundSignal {};

}  // namespace

RunRecord run(const ObjectiveFunction& f, const VariantConfig& cfg, const RunControls& ctl) {
  const bool use_nm = cfg.variant == Variant::NM_POSTA || cfg.variant == Variant::NMQI_POSTA;
  const bool use_qi = cfg.variant == Variant::QI_POSTA || cfg.variant == Variant::NMQI_POSTA;
  const bool use_h = use_nm || use_qi;

  RngStream rng(cfg.seed);
  EvalCounter counter(ctl.budget);
  ParameterState ps;
  ps.omega = cfg.omega;
  ps.tp = cfg.tp;
  ps.se = cfg.se;
  ps.beta = cfg.beta;

  RunRecord rec;
  Solution best;
  HistorySet h;

  auto optimum_reached = [&](const Solution& s) {
    return f.target_value && std::fabs(s.fitness - *f.target_value) <= ctl.term_eps;
  };
  auto sample = [&](const Solution& s) {
    rec.trace.emplace_back(counter.count, s.fitness);
    if (cfg.record_path) rec.path.push_back(s.point);
  };

  // Fired on every strict improvement: samples the trace, checks termination,
  // feeds the history mechanism, and lets NM utilization substitute an even
  // better incumbent back into the running loop.
  ImproveHook handle_improve = [&](Solution& b) {
    sample(b);
    if (optimum_reached(b)) throw OptimumFoundSignal{};
    if (!use_h) return;
    collect(h, b);
    if (use_nm && update_rate(h) >= cfg.ur_threshold) {
      Solution nb = utilize(h, f, cfg.nm_coeffs, counter);
      if (nb.fitness < b.fitness) {
        b = std::move(nb);
        sample(b);
        if (optimum_reached(b)) throw OptimumFoundSignal{};
      }
    }
  };

  try {
    if (cfg.start) {
      Point p = clamp(*cfg.start, f.bounds);
      const double v = evaluate(f, p, counter);
      best = Solution{std::move(p), v};
    } else {
      best = initial_point(f, rng, counter);
    }
    sample(best);
    if (optimum_reached(best)) throw OptimumFoundSignal{};

    if (use_h) {
      h = HistorySet::from_simplex(init_simplex_around(best, f, counter));
      if (h.best().fitness < best.fitness) {
        best = h.best();
        sample(best);
        if (optimum_reached(best)) throw OptimumFoundSignal{};
      }
    }

    while (true) {
      if (counter.exhausted()) throw BudgetExhausted{};
      posta_iteration(f, best, ps, rng, counter, handle_improve);
      if (use_qi && f.target_value &&
          average_accuracy(h, *f.target_value) <= cfg.aas_threshold) {
        Solution s2 = qi_step(h, best, f, rng, counter);
        if (s2.fitness < best.fitness) {
          best = std::move(s2);
          handle_improve(best);
        }
      }
    }
  } catch (const BudgetExhausted&) {
    rec.terminated_by = TerminationCause::BudgetExhausted;
    // Utilization may have been cut off after improving H but before the
    // incumbent adopted its best vertex.
    if (use_h && !h.entries.empty() && h.best().fitness < best.fitness) {
      best = h.best();
      if (!rec.trace.empty() && rec.trace.back().first == counter.count) {
        rec.trace.pop_back();
        if (cfg.record_path) rec.path.pop_back();
      }
      sample(best);
    }
  } catch (const OptimumFoundSignal&) {
    rec.terminated_by = TerminationCause::OptimumFound;
  }

  rec.final = best;
  rec.total_fes = counter.count;
  rec.success =
      f.target_value && std::fabs(best.fitness - *f.target_value) <= ctl.success_eps;
  return rec;
}

}  // namespace staopt
