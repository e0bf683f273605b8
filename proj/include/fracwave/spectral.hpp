#ifndef FRACWAVE_SPECTRAL_HPP
#define FRACWAVE_SPECTRAL_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fracwave/errors.hpp"
#include "fracwave/solvers.hpp"

namespace fracwave {

using SpatialFn = std::function<double(double)>;

// Abstract positive discrete spectrum {m_xi} with eigenfunctions forming an
// orthonormal basis; indices start at 1.
class SpectrumProvider {
 public:
  virtual ~SpectrumProvider() = default;
  virtual double eigenvalue(int xi) const = 0;
  virtual double eigenfunction(int xi, double x) const = 0;
  // (g, e_xi)_H via quadrature on the spatial domain
  virtual double inner_product(const SpatialFn& g, int xi) const = 0;
  virtual double domain_start() const = 0;
  virtual double domain_end() const = 0;
  virtual std::string describe() const = 0;
};

// Dirichlet Laplacian on (0, L): m_xi = (xi pi/L)^2,
// e_xi = sqrt(2/L) sin(xi pi x / L). Quadrature panel count scales with the
// mode index to keep at least 4 points per wavelength.
class DirichletLaplacian1D : public SpectrumProvider {
 public:
  explicit DirichletLaplacian1D(double length);
  double eigenvalue(int xi) const override;
  double eigenfunction(int xi, double x) const override;
  double inner_product(const SpatialFn& g, int xi) const override;
  double domain_start() const override { return 0.0; }
  double domain_end() const override { return length_; }
  std::string describe() const override;

 private:
  double length_;
};

// User-supplied spectrum: tabulated eigenvalues, eigenfunction callable and a
// fixed quadrature rule for inner products.
class TabulatedSpectrum : public SpectrumProvider {
 public:
  TabulatedSpectrum(std::vector<double> eigenvalues,
                    std::function<double(int, double)> eigenfunction,
                    std::vector<double> quad_nodes,
                    std::vector<double> quad_weights, double x0, double x1);
  double eigenvalue(int xi) const override;
  double eigenfunction(int xi, double x) const override;
  double inner_product(const SpatialFn& g, int xi) const override;
  double domain_start() const override { return x0_; }
  double domain_end() const override { return x1_; }
  std::string describe() const override;

 private:
  std::vector<double> eigenvalues_;
  std::function<double(int, double)> ef_;
  std::vector<double> qx_, qw_;
  double x0_, x1_;
};

// thrown when a retained mode's condition system is degenerate; the whole
// solve aborts rather than dropping the mode
struct DegenerateMode : DegenerateSystem {
  int xi;
  ConditionReport report;
  DegenerateMode(int xi_, ConditionReport rep);
};

struct ModeData {
  int xi = 0;
  double u1_coef = 0.0;
  double u2_coef = 0.0;
  SourceTerm f_coef;  // t -> f_xi(t)
};

struct SeriesSolution {
  Family family = Family::cauchy;
  double alpha = 2.0, beta = 0.0, gamma = 1.0;
  double a = 0.0, b = 0.0;
  double t_end = 1.0;
  int truncation = 0;
  std::vector<ModeData> data;
  std::vector<ScalarSolution> modes;  // modes[i] solves with m = -m_xi
  std::shared_ptr<const SpectrumProvider> spectrum;

  // magnitude of the last retained coefficient pair, as a tail indicator
  double tail_indicator() const;
};

// spatial data given either as eigen-coefficients or as a function to project
struct SpatialData {
  std::vector<double> coeffs;
  SpatialFn fn;

  static SpatialData zero() { return {}; }
  static SpatialData from_coeffs(std::vector<double> c);
  static SpatialData from_function(SpatialFn f);
  bool empty() const { return coeffs.empty() && !fn; }
};

// separable space-time source term g(t) * h(x)
struct SeparableTerm {
  SourceTerm g;
  SpatialData h;
};

struct PdeProblem {
  Family family = Family::cauchy;
  double alpha = 2.0;
  double beta = 0.0;
  double gamma = 1.0;
  double a = 0.0;  // inner / inner-boundary points
  double b = 0.0;
  double t_end = 1.0;
  SpatialData u1, u2;
  std::vector<SeparableTerm> f_terms;
  int truncation = 8;  // N
  int quad_n = 512;
};

// (g, e_xi)_H for xi = 1..N
std::vector<double> project(const SpatialFn& g, int n_modes,
                            const SpectrumProvider& sp);

SeriesSolution solve_pde(const PdeProblem& prob,
                         std::shared_ptr<const SpectrumProvider> sp,
                         Exec exec = Exec::parallel);

// sum_{xi<=N} u_xi(t) e_xi(x), compensated summation
double eval_series(const SeriesSolution& s, double t, double x);

// coefficient-space norm ||u(t)||_H = sqrt(sum u_xi(t)^2) (Parseval)
double h_norm_at_time(const SeriesSolution& s, double t);

// weight compensating the t^{alpha-2} singularity near 0
double chi(double t, double alpha);

double weighted_l2_norm(const SeriesSolution& s, double t_end, int time_quad_n,
                        Exec exec = Exec::parallel);

struct DataNorms {
  double u1 = 0.0;  // ||u1||_H
  double u2 = 0.0;  // ||u2||_H
  double f = 0.0;   // ||f||_{L2(0,T;H)}
};

enum class StabilityKind { solution, operator_term, dalpha };

// ||X u||^2_{L2_chi} / (||u1||^2 + ||u2||^2 + ||f||^2) with X = identity,
// A, or D^alpha
double stability_ratio(const SeriesSolution& s, const DataNorms& norms,
                       StabilityKind kind, double t_end, int time_quad_n);

}  // namespace fracwave

#endif
