#ifndef STAOPT_CORE_HPP
#define STAOPT_CORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace staopt {

/// A point in R^D. Coordinates are in problem units and must stay finite.
using Point = std::vector<double>;

/// A point with its cached objective value. The cache is authoritative:
/// re-evaluating an unchanged point is forbidden (it would distort FE accounting).
struct Solution {
  Point point;
  double fitness = 0.0;
};

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::runtime_error("dimension mismatch: expected " + std::to_string(expected) +
                           ", got " + std::to_string(got)) {}
};

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("function evaluation budget exhausted") {}
};

struct DegenerateDirection : std::runtime_error {
  DegenerateDirection() : std::runtime_error("translation direction is degenerate (best == prev)") {}
};

struct MissingTarget : std::runtime_error {
  MissingTarget() : std::runtime_error("objective declares no target value") {}
};

struct UnknownId : std::runtime_error {
  explicit UnknownId(const std::string& id) : std::runtime_error("unknown benchmark id: " + id) {}
};

struct EmptyInput : std::runtime_error {
  explicit EmptyInput(const std::string& what) : std::runtime_error("empty input: " + what) {}
};

/// Axis-aligned box constraints, lower[i] < upper[i].
struct Bounds {
  Point lower;
  Point upper;

  std::size_t dimension() const { return lower.size(); }

  static Bounds uniform(std::size_t dim, double lo, double hi) {
    return Bounds{Point(dim, lo), Point(dim, hi)};
  }
};

/// Deterministic scalar objective over a box, with an optional known optimum
/// value used by success/termination checks and the QI gate.
struct ObjectiveFunction {
  std::string name;
  std::size_t dimension = 0;
  Bounds bounds;
  std::optional<double> target_value;
  std::function<double(const Point&)> evaluator;
};

/// Counts evaluator calls against a hard budget. Every call to evaluate()
/// increments count by exactly one; the count never exceeds the budget.
struct EvalCounter {
  long long count = 0;
  long long budget = 0;

  explicit EvalCounter(long long budget_) : budget(budget_) {}

  bool exhausted() const { return count >= budget; }
};

/// Seeded random stream threaded through a whole run. Identical seeds give
/// identical draw sequences; all distributions are hand-rolled on top of the
/// raw 64-bit generator so replays are bit-identical across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(state_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1, 1).
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }

  /// Standard Gaussian draw (Box-Muller, cached spare).
  double gaussian();

  /// Uniform integer in [0, n), unbiased via rejection.
  std::size_t uniform_index(std::size_t n);

 private:
  std::uint64_t seed_;
  // splitmix64; small state, full 64-bit output, reproducible everywhere.
  struct SplitMix {
    std::uint64_t x;
    explicit SplitMix(std::uint64_t s) : x(s) {}
    std::uint64_t operator()() {
      std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }
  } state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Evaluate f at p, charging one FE. Throws BudgetExhausted before touching the
/// evaluator when the counter is already at its budget.
double evaluate(const ObjectiveFunction& f, const Point& p, EvalCounter& counter);

/// Project each coordinate of p into [lower, upper]. Coordinates already
/// inside the box are unchanged.
Point clamp(const Point& p, const Bounds& b);

double l2_norm(const Point& p);

}  // namespace staopt

#endif
