#ifndef STAOPT_BENCHMARKS_HPP
#define STAOPT_BENCHMARKS_HPP

#include <string>
#include <vector>

#include "staopt/core.hpp"

namespace staopt {

enum class Modality { Unimodal, Multimodal };

struct BenchmarkSpec {
  std::string id;    // "F1".."F14"
  std::string name;  // e.g. "Rosenbrock"
  double range_lo;
  double range_hi;
  double f_min;
  Modality modality;
};

/// Metadata for the full benchmark set, in id order.
const std::vector<BenchmarkSpec>& benchmark_specs();

/// Build an objective by id ("F1".."F14") for dimension D >= 2, with the
/// range replicated per dimension and target value 0. Throws UnknownId.
ObjectiveFunction make_benchmark(const std::string& id, std::size_t dim);

/// Penalty term u(x, a, k, m) used by the penalized functions.
double penalty_u(double x, double a, double k, double m);

}  // namespace staopt

#endif
