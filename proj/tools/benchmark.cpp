// Compares the serial reference path against the OpenMP path for the two
// grid-parallel kernels: scalar residual verification and the chi-weighted
// space-time norm. Prints a small timing table and the speedup.

#include <chrono>
#include <cstdio>
#include <memory>

#include "fracwave/parallel.hpp"
#include "fracwave/solvers.hpp"
#include "fracwave/spectral.hpp"

using namespace fracwave;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = clk::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = clk::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-24s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", worker_count());
  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    CauchySpec spec;
    spec.eq = {1.5, -1.0, 2.0};
    spec.beta = 0.25;
    spec.gamma = 0.5;
    spec.c1_hat = 1.0;
    spec.c2_hat = 0.5;
    spec.f = SourceTerm::exponential(-1.0);
    ScalarSolution sol = solve_cauchy(spec);
    UniformGrid grid{2.0, 1000};
    double s = time_ms(
        [&] { (void)residual_report(sol, grid, 0.05, Exec::serial); }, 2);
    double p = time_ms(
        [&] { (void)residual_report(sol, grid, 0.05, Exec::parallel); }, 2);
    report("residual_report", s, p);
  }

  {
    auto sp = std::make_shared<DirichletLaplacian1D>(M_PI);
    PdeProblem prob;
    prob.alpha = 1.5;
    prob.beta = 0.25;
    prob.gamma = 0.5;
    prob.t_end = 2.0;
    prob.truncation = 32;
    prob.u1 = SpatialData::from_function(
        [](double x) { return x * (M_PI - x); });
    double s = time_ms([&] { (void)solve_pde(prob, sp, Exec::serial); }, 3);
    double p = time_ms([&] { (void)solve_pde(prob, sp, Exec::parallel); }, 3);
    report("solve_pde (N=32)", s, p);

    SeriesSolution sol = solve_pde(prob, sp);
    double s2 = time_ms(
        [&] { (void)weighted_l2_norm(sol, 2.0, 16, Exec::serial); }, 2);
    double p2 = time_ms(
        [&] { (void)weighted_l2_norm(sol, 2.0, 16, Exec::parallel); }, 2);
    report("weighted_l2_norm", s2, p2);
  }
  return 0;
}
