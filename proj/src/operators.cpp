#include "staopt/operators.hpp"

#include <cmath>

namespace staopt {

Point rotation_direction(const Point& s, RngStream& rng) {
  const std::size_t n = s.size();
  const double norm = l2_norm(s);
  Point d(n, 0.0);
  if (norm == 0.0) return d;
  const double scale = 1.0 / (static_cast<double>(n) * norm);
  // Row-wise application of an n x n uniform [-1,1] matrix; the matrix is
  // never materialized.
  for (std::size_t i = 0; i < n; ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < n; ++j) dot += rng.uniform_sym() * s[j];
    d[i] = scale * dot;
  }
  return d;
}

Point expansion_direction(const Point& s, RngStream& rng) {
  Point d(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) d[i] = rng.gaussian() * s[i];
  return d;
}

Point axesion_direction(const Point& s, RngStream& rng) {
  Point d(s.size(), 0.0);
  const std::size_t axis = rng.uniform_index(s.size());
  d[axis] = rng.gaussian() * s[axis];
  return d;
}

namespace {

template <typename DirFn>
std::vector<Point> make_candidates(const Point& s, double factor, std::size_t se,
                                   RngStream& rng, DirFn dir) {
  std::vector<Point> out;
  out.reserve(se);
  for (std::size_t k = 0; k < se; ++k) {
    Point d = dir(s, rng);
    Point c(s);
    for (std::size_t i = 0; i < s.size(); ++i) c[i] += factor * d[i];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Point> rotation_candidates(const Solution& best, double alpha,
                                       std::size_t se, RngStream& rng) {
  return make_candidates(best.point, alpha, se, rng, rotation_direction);
}

std::vector<Point> translation_candidates(const Solution& best, const Solution& prev,
                                          double beta, std::size_t se, RngStream& rng) {
  const std::size_t n = best.point.size();
  Point dir(n);
  for (std::size_t i = 0; i < n; ++i) dir[i] = best.point[i] - prev.point[i];
  const double norm = l2_norm(dir);
  if (norm == 0.0) throw DegenerateDirection();
  for (double& x : dir) x /= norm;

  std::vector<Point> out;
  out.reserve(se);
  for (std::size_t k = 0; k < se; ++k) {
    const double step = beta * rng.uniform01();
    Point c(best.point);
    for (std::size_t i = 0; i < n; ++i) c[i] += step * dir[i];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> expansion_candidates(const Solution& best, double gamma,
                                        std::size_t se, RngStream& rng) {
  return make_candidates(best.point, gamma, se, rng, expansion_direction);
}

std::vector<Point> axesion_candidates(const Solution& best, double delta,
                                      std::size_t se, RngStream& rng) {
  return make_candidates(best.point, delta, se, rng, axesion_direction);
}

}  // namespace staopt
