#ifndef STAOPT_HISTORY_HPP
#define STAOPT_HISTORY_HPP

#include <vector>

#include "staopt/core.hpp"
#include "staopt/nm_simplex.hpp"

namespace staopt {

enum class HistoryTag { Old, Current };

struct HistoryEntry {
  Solution solution;
  HistoryTag tag = HistoryTag::Old;
};

/// D+1 tagged historical solutions. The set doubles as an NM simplex: the
/// collection strategy fills it between utilizations, and utilization runs NM
/// geometric transformations on it.
struct HistorySet {
  std::vector<HistoryEntry> entries;

  std::size_t current_count() const;

  const Solution& best() const;

  /// Bootstrap from an initial simplex, all entries tagged Old.
  static HistorySet from_simplex(const Simplex& s);

  Simplex to_simplex() const;
};

/// Replace the worst (max-fitness) entry with x_current tagged Current.
/// Replacement is unconditional; equal-fitness worst entries tie-break to the
/// last index.
void collect(HistorySet& h, const Solution& x_current);

/// Fraction of entries tagged Current: n_cs / (D+1).
double update_rate(const HistorySet& h);

/// Run D+1 NM passes with h as the initial simplex, store the result back
/// with every entry re-tagged Old, and return the best solution found. On
/// BudgetExhausted the partial-progress state is kept and the exception
/// propagates.
Solution utilize(HistorySet& h, const ObjectiveFunction& f, const NmCoefficients& coeffs,
                 EvalCounter& counter);

}  // namespace staopt

#endif
