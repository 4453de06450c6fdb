#ifndef STAOPT_OPERATORS_HPP
#define STAOPT_OPERATORS_HPP

#include <vector>

#include "staopt/core.hpp"

namespace staopt {

enum class OperatorKind { Rotation, Translation, Expansion, Axesion };

/// Per-operator scale factors, all strictly positive.
struct OperatorFactors {
  double alpha = 1.0;  // rotation
  double beta = 1.0;   // translation
  double gamma = 1.0;  // expansion
  double delta = 1.0;  // axesion
};

// Each function returns `se` candidate points generated around `best`, with a
// fresh random draw per candidate. Candidates are NOT clamped here; callers
// clamp before evaluation. All draws come from `rng` in a fixed order so runs
// replay bit-identically.

/// Candidates in a hypersphere of radius alpha around best:
///   c = s + alpha * (1 / (n*||s||_2)) * R_r * s,  R_r entries uniform in [-1,1].
/// A zero-norm best has no defined direction; all candidates are copies of it.
std::vector<Point> rotation_candidates(const Solution& best, double alpha,
                                       std::size_t se, RngStream& rng);

/// Line search along the improvement direction:
///   c = best + beta * R_t * (best - prev) / ||best - prev||_2,  R_t in [0,1].
/// Throws DegenerateDirection when best == prev.
std::vector<Point> translation_candidates(const Solution& best, const Solution& prev,
                                          double beta, std::size_t se, RngStream& rng);

/// Coordinate-wise multiplicative spread: c[i] = s[i] * (1 + gamma * g_i),
/// g_i i.i.d. standard Gaussian, fresh per candidate.
std::vector<Point> expansion_candidates(const Solution& best, double gamma,
                                        std::size_t se, RngStream& rng);

/// Single-axis move: one uniformly chosen coordinate j per candidate gets
/// c[j] = s[j] * (1 + delta * g); all other coordinates are unchanged.
std::vector<Point> axesion_candidates(const Solution& best, double delta,
                                      std::size_t se, RngStream& rng);

// Direction draws for the parameter-selection grid: one unscaled direction d
// per call, using the same random scheme as the matching operator, so that
// s + a*d reproduces the operator at factor a.

Point rotation_direction(const Point& s, RngStream& rng);
Point expansion_direction(const Point& s, RngStream& rng);
Point axesion_direction(const Point& s, RngStream& rng);

}  // namespace staopt

#endif
