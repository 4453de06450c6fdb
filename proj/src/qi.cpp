#include "staopt/qi.hpp"

#include <cmath>

namespace staopt {

Point qi_point(const QiAgents& agents, const Bounds& bounds) {
  const Point& xa = agents.a.point;
  const Point& xb = agents.b.point;
  const Point& xs = agents.best.point;
  const double fa = agents.a.fitness;
  const double fb = agents.b.fitness;
  const double fs = agents.best.fitness;

  Point out(xs.size());
  for (std::size_t d = 0; d < out.size(); ++d) {
    const double den = (xs[d] - xb[d]) * fa + (xa[d] - xs[d]) * fb + (xb[d] - xa[d]) * fs;
    // The degeneracy test is relative to the term magnitudes, so it keeps
    // working when both coordinates and fitnesses are far below 1.
    const double scale = std::fabs((xs[d] - xb[d]) * fa) + std::fabs((xa[d] - xs[d]) * fb) +
                         std::fabs((xb[d] - xa[d]) * fs);
    if (std::fabs(den) <= 1e-14 * scale) {
      out[d] = xs[d];
      continue;
    }
    const double num = (xs[d] * xs[d] - xb[d] * xb[d]) * fa +
                       (xa[d] * xa[d] - xs[d] * xs[d]) * fb +
                       (xb[d] * xb[d] - xa[d] * xa[d]) * fs;
    out[d] = 0.5 * num / den;
  }
  return clamp(out, bounds);
}

double average_accuracy(const HistorySet& h, double target) {
  double sum = 0.0;
  for (const auto& e : h.entries) sum += e.solution.fitness;
  return std::fabs(sum / static_cast<double>(h.entries.size()) - target);
}

Solution qi_step(const HistorySet& h, const Solution& best, const ObjectiveFunction& f,
                 RngStream& rng, EvalCounter& counter) {
  const std::size_t n = h.entries.size();
  std::size_t ia = rng.uniform_index(n);
  std::size_t ib;
  do {
    ib = rng.uniform_index(n);
  } while (ib == ia);

  const QiAgents agents{h.entries[ia].solution, h.entries[ib].solution, best};
  Point p = qi_point(agents, f.bounds);
  if (p == best.point) return best;  // stationary interpolation, skip the FE
  const double v = evaluate(f, p, counter);
  if (v < best.fitness) return Solution{std::move(p), v};
  return best;
}

}  // namespace staopt
