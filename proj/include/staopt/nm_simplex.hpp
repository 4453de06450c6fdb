#ifndef STAOPT_NM_SIMPLEX_HPP
#define STAOPT_NM_SIMPLEX_HPP

#include <vector>

#include "staopt/core.hpp"

namespace staopt {

/// Coefficients of the five NM geometric transformations.
/// Standard values: {eta, lambda, mu, nu} = {1, 2, 0.5, 0.5}.
struct NmCoefficients {
  double eta = 1.0;     // reflection
  double lambda = 2.0;  // expansion
  double mu = 0.5;      // contraction
  double nu = 0.5;      // shrinkage
};

/// D+1 evaluated vertices in D-dimensional space.
struct Simplex {
  std::vector<Solution> vertices;

  /// Stable sort by ascending fitness; equal-fitness vertices keep insertion
  /// order so runs replay deterministically.
  void sort();

  const Solution& best() const { return vertices.front(); }

  /// Maximum pairwise L-infinity distance between vertices.
  double diameter() const;
};

/// Build the initial simplex around x0: vertex 0 is x0, vertex i perturbs
/// coordinate i-1 by 0.05 (0.00025 when that coordinate is zero). All D+1
/// vertices are clamped and evaluated.
Simplex init_simplex(const Point& x0, const ObjectiveFunction& f, EvalCounter& counter);

/// Same construction, but vertex 0 reuses the already-evaluated solution
/// instead of spending an FE on it.
Simplex init_simplex_around(const Solution& x0, const ObjectiveFunction& f,
                            EvalCounter& counter);

/// One full NM pass: sort, reflect about the centroid of the best D vertices,
/// then expansion / outside contraction / inside contraction / shrinkage per
/// the usual case analysis. New vertices are clamped before evaluation. On
/// BudgetExhausted the simplex is left in its last consistent state.
void nm_iterate(Simplex& s, const ObjectiveFunction& f, const NmCoefficients& coeffs,
                EvalCounter& counter);

/// Full NM search from x0: iterate until max_iters, budget exhaustion, or
/// simplex diameter below 1e-12. Returns the best vertex found.
Solution nm_search(const Point& x0, const ObjectiveFunction& f, const NmCoefficients& coeffs,
                   EvalCounter& counter, std::size_t max_iters);

}  // namespace staopt

#endif
