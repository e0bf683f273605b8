#ifndef FRACWAVE_FRACCALC_HPP
#define FRACWAVE_FRACCALC_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace fracwave {

struct UniformGrid {
  double t_end = 1.0;  // horizon T
  int n = 2;           // number of intervals

  double h() const { return t_end / n; }
  double node(int j) const { return t_end * j / n; }
  int node_count() const { return n + 1; }
};

// Function sampled on a uniform grid. A declared singular exponent p means
// f(t) = t^p g(t) with g continuous; values[0] may then be non-finite.
struct SampledFunction {
  UniformGrid grid;
  std::vector<double> values;
  std::optional<double> singular_exponent;

  static SampledFunction sample(const UniformGrid& g,
                                const std::function<double(double)>& f,
                                std::optional<double> p = std::nullopt);
};

// Riemann-Liouville fractional integral I^beta f at t = grid node out_index,
// product-trapezoidal rule: kernel moments exact per cell, data piecewise
// linear, declared-exponent correction on the first cell.
double rl_integral_num(const SampledFunction& f, double beta, int out_index);

// Riemann-Liouville derivative D^gamma f (0 < gamma <= 1) at a grid node,
// differencing of I^{1-gamma} f.
double rl_derivative_num(const SampledFunction& f, double gamma, int out_index);

// Riemann-Liouville derivative D^alpha f (1 < alpha <= 2) at an interior
// node, second central difference of I^{2-alpha} f.
double rl_derivative2_num(const SampledFunction& f, double alpha,
                          int out_index);

}  // namespace fracwave

#endif
