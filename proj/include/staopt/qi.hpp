#ifndef STAOPT_QI_HPP
#define STAOPT_QI_HPP

#include "staopt/core.hpp"
#include "staopt/history.hpp"

namespace staopt {

/// Three distinct search agents for quadratic interpolation.
struct QiAgents {
  Solution a;
  Solution b;
  Solution best;
};

/// Per-dimension parabola vertex through the three agents:
///   x_d = 0.5 * [(xb*^2-xb^2) f(a) + (xa^2-xb*^2) f(b) + (xb^2-xa^2) f(b*)]
///             / [(xb*-xb) f(a) + (xa-xb*) f(b) + (xb-xa) f(b*)]
/// Dimensions whose denominator magnitude is below 1e-14 fall back to the
/// best agent's coordinate. The result is clamped to bounds.
Point qi_point(const QiAgents& agents, const Bounds& bounds);

/// |mean fitness of H - target|; the gate statistic for the QI stage.
double average_accuracy(const HistorySet& h, double target);

/// One QI exploitation step: draw two distinct entries of H as agents a and b,
/// interpolate against the incumbent, and greedily accept the interpolated
/// point if strictly better. A QI point identical to the incumbent is not
/// re-evaluated.
Solution qi_step(const HistorySet& h, const Solution& best, const ObjectiveFunction& f,
                 RngStream& rng, EvalCounter& counter);

}  // namespace staopt

#endif
