#include "staopt/nm_simplex.hpp"

#include <algorithm>
#include <cmath>

namespace staopt {

void Simplex::sort() {
  std::stable_sort(vertices.begin(), vertices.end(),
                   [](const Solution& a, const Solution& b) { return a.fitness < b.fitness; });
}

double Simplex::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const Point& a = vertices[i].point;
      const Point& b = vertices[j].point;
      for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::fabs(a[k] - b[k]));
    }
  }
  return d;
}

namespace {

void add_perturbed_vertices(Simplex& s, const Point& x0, const ObjectiveFunction& f,
                            EvalCounter& counter) {
  for (std::size_t i = 0; i < x0.size(); ++i) {
    Point p(x0);
    p[i] += (x0[i] != 0.0) ? 0.05 : 0.00025;
    p = clamp(p, f.bounds);
    const double v = evaluate(f, p, counter);
    s.vertices.push_back(Solution{std::move(p), v});
  }
}

}  // namespace

Simplex init_simplex(const Point& x0, const ObjectiveFunction& f, EvalCounter& counter) {
  Simplex s;
  s.vertices.reserve(x0.size() + 1);
  {
    Point p = clamp(x0, f.bounds);
    const double v = evaluate(f, p, counter);
    s.vertices.push_back(Solution{std::move(p), v});
  }
  add_perturbed_vertices(s, x0, f, counter);
  return s;
}

Simplex init_simplex_around(const Solution& x0, const ObjectiveFunction& f,
                            EvalCounter& counter) {
  Simplex s;
  s.vertices.reserve(x0.point.size() + 1);
  s.vertices.push_back(x0);
  add_perturbed_vertices(s, x0.point, f, counter);
  return s;
}

namespace {

Point affine(const Point& base, const Point& dir_from, const Point& dir_to, double coeff) {
  // base + coeff * (dir_to - dir_from)
  Point p(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    p[i] = base[i] + coeff * (dir_to[i] - dir_from[i]);
  }
  return p;
}

void shrink(Simplex& s, const ObjectiveFunction& f, double nu, EvalCounter& counter) {
  const Point x1 = s.vertices.front().point;
  for (std::size_t i = 1; i < s.vertices.size(); ++i) {
    Point p = clamp(affine(x1, x1, s.vertices[i].point, nu), f.bounds);
    const double v = evaluate(f, p, counter);
    s.vertices[i] = Solution{std::move(p), v};
  }
}

}  // namespace

void nm_iterate(Simplex& s, const ObjectiveFunction& f, const NmCoefficients& coeffs,
                EvalCounter& counter) {
  s.sort();
  const std::size_t d = s.vertices.size() - 1;
  Solution& worst = s.vertices.back();

  Point centroid(s.vertices.front().point.size(), 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < centroid.size(); ++k) centroid[k] += s.vertices[i].point[k];
  }
  for (double& c : centroid) c /= static_cast<double>(d);

  const double f_best = s.vertices.front().fitness;
  const double f_second_worst = s.vertices[d - 1].fitness;
  const double f_worst = worst.fitness;

  Point xr = clamp(affine(centroid, worst.point, centroid, coeffs.eta), f.bounds);
  const double fr = evaluate(f, xr, counter);

  if (f_best <= fr && fr < f_second_worst) {
    worst = Solution{std::move(xr), fr};
    return;
  }
  if (fr < f_best) {
    Point xe = clamp(affine(centroid, centroid, xr, coeffs.lambda), f.bounds);
    const double fe = evaluate(f, xe, counter);
    worst = (fe < fr) ? Solution{std::move(xe), fe} : Solution{std::move(xr), fr};
    return;
  }
  if (fr < f_worst) {  // f_second_worst <= fr < f_worst: outside contraction
    Point xoc = clamp(affine(centroid, centroid, xr, coeffs.mu), f.bounds);
    const double foc = evaluate(f, xoc, counter);
    if (foc <= fr) {
      worst = Solution{std::move(xoc), foc};
      return;
    }
  } else {  // fr >= f_worst: inside contraction
    Point xic = clamp(affine(centroid, xr, centroid, coeffs.mu), f.bounds);
    const double fic = evaluate(f, xic, counter);
    if (fic < f_worst) {
      worst = Solution{std::move(xic), fic};
      return;
    }
  }
  shrink(s, f, coeffs.nu, counter);
}

Solution nm_search(const Point& x0, const ObjectiveFunction& f, const NmCoefficients& coeffs,
                   EvalCounter& counter, std::size_t max_iters) {
  Simplex s;
  try {
    s = init_simplex(x0, f, counter);
    for (std::size_t it = 0; it < max_iters; ++it) {
      if (s.diameter() < 1e-12) break;
      nm_iterate(s, f, coeffs, counter);
    }
  } catch (const BudgetExhausted&) {
    if (s.vertices.empty()) throw;
  }
  s.sort();
  return s.best();
}

}  // namespace staopt
