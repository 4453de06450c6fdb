#include "staopt/benchmarks.hpp"

#include <cmath>

namespace staopt {

double penalty_u(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

namespace {

double elliptic(const Point& x) {  // F1, sum from i=2 as printed
  const double n = static_cast<double>(x.size());
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double expo = static_cast<double>(i) / (n - 1.0);  // (i-1)/(D-1), 1-based
    s += std::pow(1e6, expo) * x[i] * x[i];
  }
  return s;
}

double penalized1(const Point& x) {  // F2
  const double n = static_cast<double>(x.size());
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  double core = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double yi = y(i);
    const double si = std::sin(M_PI * y(i + 1));
    core += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * si * si);
  }
  const double yd = y(x.size() - 1);
  const double s1 = std::sin(M_PI * y(0));
  core += (yd - 1.0) * (yd - 1.0) + 10.0 * s1 * s1;
  double pen = 0.0;
  for (double xi : x) pen += penalty_u(xi, 10.0, 100.0, 4.0);
  return M_PI / n * core + pen;
}

double rosenbrock(const Point& x) {  // F3
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double schwefel12(const Point& x) {  // F4, standard nested-sum form
  double s = 0.0;
  double partial = 0.0;
  for (double xi : x) {
    partial += xi;
    s += partial * partial;
  }
  return s;
}

double schwefel24(const Point& x) {  // F5
  double s = 0.0;
  for (double xi : x) {
    const double a = xi - 1.0;
    const double b = x[0] - xi * xi;
    s += a * a + b * b;
  }
  return s;
}

double sphere(const Point& x) {  // F6
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return s;
}

double rastrigin(const Point& x) {  // F7
  double s = 0.0;
  for (double xi : x) s += xi * xi - 10.0 * std::cos(2.0 * M_PI * xi) + 10.0;
  return s;
}

double griewank(const Point& x) {  // F8
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i] / 4000.0;
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s - p + 1.0;
}

double sum_squares(const Point& x) {  // F9, sum from i=2 as printed
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    s += static_cast<double>(i + 1) * x[i] * x[i];
  }
  return s;
}

double levy_montalvo1(const Point& x) {  // F10
  const double n = static_cast<double>(x.size());
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  const double s1 = std::sin(M_PI * y(0));
  double core = 10.0 * s1 * s1;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double yi = y(i);
    const double si = std::sin(M_PI * y(i + 1));
    core += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * si * si);
  }
  const double yd = y(x.size() - 1);
  core += (yd - 1.0) * (yd - 1.0);
  return M_PI / n * core;
}

double zakharov(const Point& x) {  // F11
  double s = 0.0;
  double t = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    t += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  return s + t * t + t * t * t * t;
}

double schwefel222(const Point& x) {  // F12
  double s = 0.0;
  double p = 1.0;
  for (double xi : x) {
    s += std::fabs(xi);
    p *= std::fabs(xi);
  }
  return s + p;
}

double cigar(const Point& x) {  // F13, sixth power on the tail as printed
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double x2 = x[i] * x[i];
    s += x2 * x2 * x2;
  }
  return x[0] * x[0] + 1e6 * s;
}

double csendes(const Point& x) {  // F14; the x=0 term is taken at its limit 0
  double s = 0.0;
  for (double xi : x) {
    if (xi == 0.0) continue;
    const double x2 = xi * xi;
    s += x2 * x2 * x2 * (2.0 + std::sin(1.0 / xi));
  }
  return s;
}

struct Entry {
  BenchmarkSpec spec;
  double (*fn)(const Point&);
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {{"F1", "Elliptic", -100.0, 100.0, 0.0, Modality::Unimodal}, elliptic},
      {{"F2", "Penalized 1", -50.0, 50.0, 0.0, Modality::Multimodal}, penalized1},
      {{"F3", "Rosenbrock", -30.0, 30.0, 0.0, Modality::Unimodal}, rosenbrock},
      {{"F4", "Schwefel 1.2", -100.0, 100.0, 0.0, Modality::Unimodal}, schwefel12},
      {{"F5", "Schwefel 2.4", 0.0, 10.0, 0.0, Modality::Multimodal}, schwefel24},
      {{"F6", "Sphere", -100.0, 100.0, 0.0, Modality::Unimodal}, sphere},
      {{"F7", "Rastrigin", -5.12, 5.12, 0.0, Modality::Multimodal}, rastrigin},
      {{"F8", "Griewank", -60.0, 60.0, 0.0, Modality::Multimodal}, griewank},
      {{"F9", "Sum squares", -10.0, 10.0, 0.0, Modality::Unimodal}, sum_squares},
      {{"F10", "Levy and Montalvo 1", -10.0, 10.0, 0.0, Modality::Multimodal}, levy_montalvo1},
      {{"F11", "Zakharov", -5.0, 10.0, 0.0, Modality::Unimodal}, zakharov},
      {{"F12", "Schwefel 2.2.2", -10.0, 10.0, 0.0, Modality::Unimodal}, schwefel222},
      {{"F13", "Cigar", -100.0, 100.0, 0.0, Modality::Unimodal}, cigar},
      {{"F14", "Csendes", -1.0, 1.0, 0.0, Modality::Multimodal}, csendes},
  };
  return t;
}

}  // namespace

const std::vector<BenchmarkSpec>& benchmark_specs() {
  static const std::vector<BenchmarkSpec> specs = [] {
    std::vector<BenchmarkSpec> s;
    for (const auto& e : table()) s.push_back(e.spec);
    return s;
  }();
  return specs;
}

ObjectiveFunction make_benchmark(const std::string& id, std::size_t dim) {
  for (const auto& e : table()) {
    if (e.spec.id == id) {
      ObjectiveFunction f;
      f.name = e.spec.id + " " + e.spec.name;
      f.dimension = dim;
      f.bounds = Bounds::uniform(dim, e.spec.range_lo, e.spec.range_hi);
      f.target_value = e.spec.f_min;
      f.evaluator = e.fn;
      return f;
    }
  }
  throw UnknownId(id);
}

}  // namespace staopt
