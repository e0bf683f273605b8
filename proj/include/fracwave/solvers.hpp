#ifndef FRACWAVE_SOLVERS_HPP
#define FRACWAVE_SOLVERS_HPP

#include <array>
#include <string>

#include "fracwave/fraccalc.hpp"
#include "fracwave/source.hpp"

namespace fracwave {

// execution policy for the grid-parallel kernels; `parallel` uses OpenMP,
// `serial` is the reference path the tests compare against
enum class Exec { serial, parallel };

struct EquationParams {
  double alpha;  // order, in (1,2]
  double m;      // coefficient, either sign
  double t_end;  // horizon T > 0

  void validate() const;
};

enum class Family { cauchy, inner, inner_boundary };

std::string family_name(Family f);

struct CauchySpec {
  EquationParams eq;
  double beta;   // in [0, 2-alpha]
  double gamma;  // in (0, alpha-1]
  double c1_hat = 0.0;
  double c2_hat = 0.0;
  SourceTerm f;
  int quad_n = 512;

  void validate() const;
};

struct InnerSpec {
  EquationParams eq;
  double beta;
  double gamma;
  double a;  // evaluation point, 0 < a < T
  double d1_hat = 0.0;
  double d2_hat = 0.0;
  SourceTerm f;
  int quad_n = 512;

  void validate() const;
};

struct InnerBoundarySpec {
  EquationParams eq;
  double beta;
  double gamma;
  double a;  // I^beta point, in (0, T]
  double b;  // D^gamma point, in (0, T]
  double e1_hat = 0.0;
  double e2_hat = 0.0;
  SourceTerm f;
  int quad_n = 512;

  void validate() const;
};

// u(t) = C1 t^{a-1}E_{a,a}(m t^a) + C2 t^{a-2}E_{a,a-1}(m t^a) + Duhamel
struct ScalarSolution {
  EquationParams eq;
  double C1 = 0.0;
  double C2 = 0.0;
  SourceTerm f;
  Family family = Family::cauchy;
  int quad_n = 512;

  double eval(double t) const;
};

struct ConditionReport {
  std::array<std::array<double, 2>, 2> matrix{};
  std::array<double, 2> rhs{};
  double det = 0.0;
  // the two sides of the power-free form of the solvability inequality
  double power_free_lhs = 0.0;
  double power_free_rhs = 0.0;
  bool solvable = false;
  double rel_margin = 0.0;  // |det| / (max-norm of matrix)^2
};

inline constexpr double kDegeneracyEpsilon = 1e-10;

// ---- basis and functional evaluators ----

double basis1(const EquationParams& eq, double t);  // t^{a-1}E_{a,a}(m t^a)
double basis2(const EquationParams& eq, double t);  // t^{a-2}E_{a,a-1}(m t^a)

// int_0^t f(t-s) s^{mu-1} E_{alpha,mu}(m s^alpha) ds, product integration
// with the s^{mu-1} endpoint weight handled analytically per panel
double ml_convolution(double alpha, double mu, double m, const SourceTerm& f,
                      double t, int quad_n);

// forced-response term of the general solution (mu = alpha)
double duhamel(const EquationParams& eq, const SourceTerm& f, double t,
               int quad_n);

// (I^beta u)(t) via the analytic shift of every term; beta = 0 is u(t)
double ibeta_of_solution(const ScalarSolution& sol, double beta, double t);

// (D^gamma u)(t), 0 < gamma <= alpha-1; the critical case gamma = alpha-1
// evaluates the C2 term through m t^{alpha-1}E_{alpha,alpha}(m t^alpha)
double dgamma_of_solution(const ScalarSolution& sol, double gamma, double t);

// ---- solvers ----

ScalarSolution solve_cauchy(const CauchySpec& spec);

ConditionReport build_condition_system(const InnerSpec& spec);
ConditionReport build_condition_system(const InnerBoundarySpec& spec);

ScalarSolution solve_inner(const InnerSpec& spec);
ScalarSolution solve_inner_boundary(const InnerBoundarySpec& spec);

// printed closed-form interpolation bases, kept as cross-checks against the
// direct 2x2 solve (index selects which datum the basis reproduces)
double e_hat(int index, const EquationParams& eq, double beta, double gamma,
             double a, double t);
double f_hat(int index, const EquationParams& eq, double beta, double gamma,
             double a, double b, double t);

// ---- verification ----

struct ResidualReport {
  double sup_abs = 0.0;
  double sup_rel = 0.0;
  double tol = 0.0;
  double t_min = 0.0;
  bool pass = false;
};

// sup over grid nodes in [t_min, T] of |D^alpha u - m u - f|, with D^alpha
// from the numeric fraccalc oracle
ResidualReport residual_report(const ScalarSolution& sol,
                               const UniformGrid& grid, double t_min,
                               Exec exec = Exec::parallel);

// least-squares slope of log|u| vs log t on [1e-4, 1e-2]
double singular_exponent_estimate(const ScalarSolution& sol);

}  // namespace fracwave

#endif
