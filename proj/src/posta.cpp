#include "staopt/posta.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace staopt {

namespace {

Point draw_direction(OperatorKind kind, const Point& s, RngStream& rng) {
  switch (kind) {
    case OperatorKind::Rotation:
      return rotation_direction(s, rng);
    case OperatorKind::Expansion:
      return expansion_direction(s, rng);
    case OperatorKind::Axesion:
      return axesion_direction(s, rng);
    default:
      throw std::logic_error("translation has no selectable factor");
  }
}

double& held_factor(OperatorKind kind, ParameterState& ps) {
  switch (kind) {
    case OperatorKind::Rotation:
      return ps.current_alpha;
    case OperatorKind::Expansion:
      return ps.current_gamma;
    default:
      return ps.current_delta;
  }
}

std::vector<Point> raw_candidates(OperatorKind kind, const Solution& best, double factor,
                                  std::size_t se, RngStream& rng) {
  switch (kind) {
    case OperatorKind::Rotation:
      return rotation_candidates(best, factor, se, rng);
    case OperatorKind::Expansion:
      return expansion_candidates(best, factor, se, rng);
    default:
      return axesion_candidates(best, factor, se, rng);
  }
}

// Evaluates all candidates (clamped) and replaces best with the minimum if it
// strictly improves. On BudgetExhausted the best point seen so far is still
// committed before the exception propagates.
bool greedy_accept(const ObjectiveFunction& f, Solution& best,
                   const std::vector<Point>& cands, EvalCounter& counter) {
  double min_fit = best.fitness;
  Point min_pt;
  bool improved = false;
  try {
    for (const Point& c : cands) {
      Point p = clamp(c, f.bounds);
      const double v = evaluate(f, p, counter);
      if (v < min_fit) {
        min_fit = v;
        min_pt = std::move(p);
        improved = true;
      }
    }
  } catch (const BudgetExhausted&) {
    if (improved) best = Solution{std::move(min_pt), min_fit};
    throw;
  }
  if (improved) best = Solution{std::move(min_pt), min_fit};
  return improved;
}

}  // namespace

double select_parameter(const ObjectiveFunction& f, Solution& best, OperatorKind kind,
                        ParameterState& ps, RngStream& rng, EvalCounter& counter,
                        SelectionTrace* trace) {
  const auto& omega = ps.omega.values;

  // Fresh directions, shared across all factor values: the selection varies
  // the factor against a fixed direction set.
  std::vector<Point> dirs;
  dirs.reserve(ps.se);
  for (std::size_t k = 0; k < ps.se; ++k) dirs.push_back(draw_direction(kind, best.point, rng));

  double chosen = omega.front();
  double min_fit = std::numeric_limits<double>::infinity();
  Point min_pt;

  auto commit = [&] {
    held_factor(kind, ps) = chosen;
    if (trace != nullptr) {
      trace->chosen = chosen;
      trace->best_seen = min_fit;
    }
    if (min_fit < best.fitness) best = Solution{min_pt, min_fit};
  };

  try {
    for (double a : omega) {
      for (const Point& d : dirs) {
        Point p(best.point);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += a * d[i];
        p = clamp(p, f.bounds);
        const double v = evaluate(f, p, counter);
        if (trace != nullptr) {
          trace->points.push_back(p);
          trace->fitness.push_back(v);
        }
        if (v < min_fit) {  // strict: first (largest) factor wins ties
          min_fit = v;
          min_pt = std::move(p);
          chosen = a;
        }
      }
    }
  } catch (const BudgetExhausted&) {
    if (!std::isinf(min_fit)) commit();
    throw;
  }
  commit();
  return chosen;
}

void operator_phase(const ObjectiveFunction& f, Solution& best, OperatorKind kind,
                    ParameterState& ps, RngStream& rng, EvalCounter& counter,
                    const ImproveHook& on_improve) {
  const double before = best.fitness;
  select_parameter(f, best, kind, ps, rng, counter);
  if (best.fitness < before && on_improve) on_improve(best);

  const double factor = held_factor(kind, ps);
  for (std::size_t t = 0; t < ps.tp; ++t) {
    const Solution prev = best;
    const bool improved =
        greedy_accept(f, best, raw_candidates(kind, best, factor, ps.se, rng), counter);
    if (!improved) continue;
    if (on_improve) on_improve(best);
    // Translation is invoked only after a strict improvement. A step so small
    // that its norm underflows has no usable direction and is skipped.
    if (best.point != prev.point) {
      try {
        if (greedy_accept(f, best,
                          translation_candidates(best, prev, ps.beta, ps.se, rng), counter)) {
          if (on_improve) on_improve(best);
        }
      } catch (const DegenerateDirection&) {
      }
    }
  }
}

void posta_iteration(const ObjectiveFunction& f, Solution& best, ParameterState& ps,
                     RngStream& rng, EvalCounter& counter, const ImproveHook& on_improve) {
  operator_phase(f, best, OperatorKind::Expansion, ps, rng, counter, on_improve);
  operator_phase(f, best, OperatorKind::Rotation, ps, rng, counter, on_improve);
  operator_phase(f, best, OperatorKind::Axesion, ps, rng, counter, on_improve);
}

}  // namespace staopt
