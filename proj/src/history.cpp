#include "staopt/history.hpp"

namespace staopt {

std::size_t HistorySet::current_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += (e.tag == HistoryTag::Current) ? 1 : 0;
  return n;
}

const Solution& HistorySet::best() const {
  const Solution* b = &entries.front().solution;
  for (const auto& e : entries) {
    if (e.solution.fitness < b->fitness) b = &e.solution;
  }
  return *b;
}

HistorySet HistorySet::from_simplex(const Simplex& s) {
  HistorySet h;
  h.entries.reserve(s.vertices.size());
  for (const auto& v : s.vertices) h.entries.push_back(HistoryEntry{v, HistoryTag::Old});
  return h;
}

Simplex HistorySet::to_simplex() const {
  Simplex s;
  s.vertices.reserve(entries.size());
  for (const auto& e : entries) s.vertices.push_back(e.solution);
  return s;
}

void collect(HistorySet& h, const Solution& x_current) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < h.entries.size(); ++i) {
    if (h.entries[i].solution.fitness >= h.entries[worst].solution.fitness) worst = i;
  }
  h.entries[worst] = HistoryEntry{x_current, HistoryTag::Current};
}

double update_rate(const HistorySet& h) {
  return static_cast<double>(h.current_count()) / static_cast<double>(h.entries.size());
}

Solution utilize(HistorySet& h, const ObjectiveFunction& f, const NmCoefficients& coeffs,
                 EvalCounter& counter) {
  Simplex s = h.to_simplex();
  const std::size_t passes = h.entries.size();  // D+1
  try {
    for (std::size_t i = 0; i < passes; ++i) nm_iterate(s, f, coeffs, counter);
  } catch (const BudgetExhausted&) {
    h = HistorySet::from_simplex(s);
    throw;
  }
  h = HistorySet::from_simplex(s);
  return h.best();
}

}  // namespace staopt
