#ifndef STAOPT_POSTA_HPP
#define STAOPT_POSTA_HPP

#include <functional>
#include <vector>

#include "staopt/core.hpp"
#include "staopt/operators.hpp"

namespace staopt {

/// Candidate factor values for the per-operator parameter selection.
/// Strictly decreasing, all positive.
struct OmegaSet {
  std::vector<double> values;

  static OmegaSet standard() {
    return OmegaSet{{1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}};
  }
};

/// Mutable per-run parameter state: the held factor for each selectable
/// operator, the candidate set, the hold period and the candidate-set size.
struct ParameterState {
  OmegaSet omega = OmegaSet::standard();
  std::size_t tp = 10;  // hold period
  std::size_t se = 50;  // candidate-set size
  double current_alpha = 1.0;
  double current_gamma = 1.0;
  double current_delta = 1.0;
  double beta = 1.0;  // translation factor, held constant
};

/// Hook fired after every strict improvement of the incumbent. The hook may
/// replace the solution with a strictly better one (used by the history
/// mechanism to feed NM utilization back into the running loop).
using ImproveHook = std::function<void(Solution&)>;

/// Record of every point evaluated by one parameter selection, for
/// independent re-scan checks.
struct SelectionTrace {
  std::vector<Point> points;
  std::vector<double> fitness;
  double chosen = 0.0;
  double best_seen = 0.0;
};

/// Scan the |Omega| x SE grid of s + a*d (fresh directions shared across the
/// factor values, per the matching operator's draw scheme), pick the factor
/// attaining the global minimum (first/largest factor wins ties), and update
/// the matching held factor. `best` is improved in place when the grid finds a
/// strictly better point, so a mid-scan BudgetExhausted still leaves the best
/// seen so far. Returns the chosen factor.
double select_parameter(const ObjectiveFunction& f, Solution& best, OperatorKind kind,
                        ParameterState& ps, RngStream& rng, EvalCounter& counter,
                        SelectionTrace* trace = nullptr);

/// One weighted-operator phase: select_parameter once, then T_p rounds of the
/// raw operator at the held factor. Each strict improvement triggers a greedy
/// translation pass along (new best - previous best) and fires `on_improve`.
void operator_phase(const ObjectiveFunction& f, Solution& best, OperatorKind kind,
                    ParameterState& ps, RngStream& rng, EvalCounter& counter,
                    const ImproveHook& on_improve = nullptr);

/// One POSTA main-loop iteration: expansion, rotation, axesion phases in that
/// order.
void posta_iteration(const ObjectiveFunction& f, Solution& best, ParameterState& ps,
                     RngStream& rng, EvalCounter& counter,
                     const ImproveHook& on_improve = nullptr);

}  // namespace staopt

#endif
