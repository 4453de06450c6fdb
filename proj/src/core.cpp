#include "staopt/core.hpp"

#include <algorithm>
#include <cmath>

namespace staopt {

double RngStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0,1] x [0,1) so the log argument is never zero.
  double u1;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::size_t RngStream::uniform_index(std::size_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = state_();
  } while (r >= limit);
  return static_cast<std::size_t>(r % n);
}

double evaluate(const ObjectiveFunction& f, const Point& p, EvalCounter& counter) {
  if (p.size() != f.dimension) throw DimensionMismatch(f.dimension, p.size());
  if (counter.count >= counter.budget) throw BudgetExhausted();
  ++counter.count;
  return f.evaluator(p);
}

Point clamp(const Point& p, const Bounds& b) {
  if (p.size() != b.dimension()) throw DimensionMismatch(b.dimension(), p.size());
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = std::min(std::max(p[i], b.lower[i]), b.upper[i]);
  }
  return out;
}

double l2_norm(const Point& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

}  // namespace staopt
