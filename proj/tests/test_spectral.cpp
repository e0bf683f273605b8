#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "fracwave/errors.hpp"
#include "fracwave/special.hpp"
#include "fracwave/spectral.hpp"

using namespace fracwave;

namespace {

std::shared_ptr<DirichletLaplacian1D> half_period() {
  return std::make_shared<DirichletLaplacian1D>(M_PI);
}

}  // namespace

TEST_CASE("Dirichlet eigenpairs are orthonormal") {
  auto sp = half_period();
  CHECK(sp->eigenvalue(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sp->eigenvalue(5) == doctest::Approx(25.0).epsilon(1e-14));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      double ip = sp->inner_product(
          [&](double x) { return sp->eigenfunction(i, x); }, j);
      CHECK(ip == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
      CHECK(std::fabs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("projection of x(pi - x): frozen odd-mode coefficients") {
  auto sp = half_period();
  auto g = [](double x) { return x * (M_PI - x); };
  std::vector<double> c = project(g, 4, *sp);
  // (g, e_xi) = 4 sqrt(2/pi) / xi^3 for odd xi, 0 for even; the leading
  // value was fixed offline at 60 digits
  CHECK(c[0] == doctest::Approx(3.191538243211461423519568).epsilon(1e-12));
  CHECK(std::fabs(c[1]) < 1e-12);
  CHECK(c[2] ==
        doctest::Approx(3.191538243211461423519568 / 27.0).epsilon(1e-10));
  CHECK(std::fabs(c[3]) < 1e-12);
}

TEST_CASE("single-mode classical wave: u = cos(t) e_1(x)") {
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 2.0;
  prob.beta = 0.0;
  prob.gamma = 1.0;
  prob.t_end = 7.0;
  prob.u1 = SpatialData::from_coeffs({1.0});
  prob.truncation = 4;
  auto sp = half_period();
  SeriesSolution s = solve_pde(prob, sp);

  CHECK(s.modes[0].C2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.modes[0].C1 == 0.0);
  for (int k = 1; k < 4; ++k) {
    CHECK(s.modes[k].C1 == 0.0);
    CHECK(s.modes[k].C2 == 0.0);
  }
  for (double t : {0.0, 0.9, 2.5, 6.2})
    for (double x : {0.4, 1.57, 2.8}) {
      double want = std::cos(t) * std::sqrt(2.0 / M_PI) * std::sin(x);
      CHECK(eval_series(s, t, x) == doctest::Approx(want).epsilon(1e-11));
    }
  for (double t : {0.3, 2.0})
    CHECK(h_norm_at_time(s, t) ==
          doctest::Approx(std::fabs(std::cos(t))).epsilon(1e-11));
}

TEST_CASE("single fractional mode: frozen point value and weighted norm") {
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 1.5;
  prob.beta = 0.5;
  prob.gamma = 0.5;
  prob.t_end = 1.0;
  prob.u1 = SpatialData::from_coeffs({1.0});
  prob.truncation = 1;
  auto sp = half_period();
  SeriesSolution s = solve_pde(prob, sp);

  // u(1, pi/2) = E_{1.5,0.5}(-1) sqrt(2/pi), both factors frozen offline
  CHECK(eval_series(s, 1.0, M_PI / 2.0) ==
        doctest::Approx(-0.1382675413885600998253239).epsilon(1e-12));
  // || u ||_{L2,chi} = ( int_0^1 E_{1.5,0.5}(-t^{1.5})^2 dt )^{1/2}
  CHECK(weighted_l2_norm(s, 1.0, 64) ==
        doctest::Approx(0.325373928019944562032827).epsilon(1e-5));
  // serial reference path agrees exactly
  CHECK(weighted_l2_norm(s, 1.0, 64, Exec::serial) ==
        weighted_l2_norm(s, 1.0, 64, Exec::parallel));
}

TEST_CASE("Parseval: coefficient norm equals the spatial L2 norm") {
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 1.75;
  prob.beta = 0.25;
  prob.gamma = 0.75;
  prob.t_end = 2.0;
  prob.u1 = SpatialData::from_function(
      [](double x) { return x * (M_PI - x); });
  prob.truncation = 6;
  auto sp = half_period();
  SeriesSolution s = solve_pde(prob, sp);

  double t = 0.8;
  // spatial quadrature of u(t,.)^2 over (0, pi)
  int panels = 64;
  double hp = M_PI / panels;
  double ss = 0.0;
  for (int p = 0; p < panels; ++p)
    for (int i = 0; i < 8; ++i) {
      static const double gx[8] = {0.019855071751231884, 0.101666761293186630,
                                   0.237233795041835507, 0.408282678752175098,
                                   0.591717321247824902, 0.762766204958164493,
                                   0.898333238706813370, 0.980144928248768116};
      static const double gw[8] = {0.050614268145188130, 0.111190517226687235,
                                   0.156853322938943644, 0.181341891689180991,
                                   0.181341891689180991, 0.156853322938943644,
                                   0.111190517226687235, 0.050614268145188130};
      double x = (p + gx[i]) * hp;
      double u = eval_series(s, t, x);
      ss += gw[i] * hp * u * u;
    }
  CHECK(h_norm_at_time(s, t) == doctest::Approx(std::sqrt(ss)).epsilon(1e-10));
}

TEST_CASE("weight function chi") {
  CHECK(chi(0.5, 1.5) == doctest::Approx(0.5).epsilon(1e-14));  // t^{2(2-a)}
  CHECK(chi(0.25, 1.75) == doctest::Approx(std::pow(0.25, 0.5)).epsilon(1e-14));
  CHECK(chi(0.3, 2.0) == 1.0);
  CHECK(chi(1.0, 1.25) == 1.0);
  CHECK(chi(57.0, 1.25) == 1.0);
  CHECK_THROWS_AS(chi(-0.1, 1.5), DomainError);
}

TEST_CASE("stability ratio of the classical cosine mode is pi") {
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 2.0;
  prob.beta = 0.0;
  prob.gamma = 1.0;
  prob.t_end = 2.0 * M_PI;
  prob.u1 = SpatialData::from_coeffs({1.0});
  prob.truncation = 1;
  auto sp = half_period();
  SeriesSolution s = solve_pde(prob, sp);

  CHECK(weighted_l2_norm(s, 2.0 * M_PI, 128) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
  DataNorms norms{1.0, 0.0, 0.0};
  // m_1 = 1, so u, A u and D^alpha u = -u all have the same norm
  for (StabilityKind kind : {StabilityKind::solution,
                             StabilityKind::operator_term,
                             StabilityKind::dalpha}) {
    CHECK(stability_ratio(s, norms, kind, 2.0 * M_PI, 128) ==
          doctest::Approx(M_PI).epsilon(1e-9));
  }
  CHECK_THROWS_AS(stability_ratio(s, DataNorms{}, StabilityKind::solution,
                                  2.0 * M_PI, 128),
                  DivisionByZero);
}

TEST_CASE("stability ratios stay bounded across order and truncation") {
  auto sp = half_period();
  auto g = [](double x) { return x * (M_PI - x); };
  std::vector<double> coef = project(g, 64, *sp);
  double u1_norm_sq = 0.0;
  for (double c : coef) u1_norm_sq += c * c;

  for (double alpha : {1.25, 1.5, 1.75, 2.0}) {
    double prev = -1.0;
    for (int N : {4, 16, 64}) {
      PdeProblem prob;
      prob.family = Family::cauchy;
      prob.alpha = alpha;
      prob.beta = 2.0 - alpha;
      prob.gamma = alpha - 1.0;
      prob.t_end = 1.0;
      prob.u1 = SpatialData::from_coeffs(
          std::vector<double>(coef.begin(), coef.begin() + N));
      prob.truncation = N;
      SeriesSolution s = solve_pde(prob, sp);
      DataNorms norms{std::sqrt(u1_norm_sq), 0.0, 0.0};
      double r = stability_ratio(s, norms, StabilityKind::solution, 1.0, 32);
      CHECK(r > 0.0);
      CHECK(r < 10.0);  // bounded independent of alpha and N
      if (prev >= 0.0) {
        // refining the truncation must not inflate the ratio noticeably
        CHECK(r <= prev * 1.05 + 1e-12);
      }
      prev = r;
    }
  }
}

TEST_CASE("truncation convergence for smooth data") {
  auto sp = half_period();
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 1.5;
  prob.beta = 0.5;
  prob.gamma = 0.5;
  prob.t_end = 1.0;
  prob.u1 = SpatialData::from_function(
      [](double x) { return x * (M_PI - x); });

  double t = 0.7, x = 1.1;
  double ref, u8, u16;
  prob.truncation = 64;
  SeriesSolution s64 = solve_pde(prob, sp);
  ref = eval_series(s64, t, x);
  prob.truncation = 8;
  SeriesSolution s8 = solve_pde(prob, sp);
  u8 = eval_series(s8, t, x);
  prob.truncation = 16;
  SeriesSolution s16 = solve_pde(prob, sp);
  u16 = eval_series(s16, t, x);

  CHECK(std::fabs(u16 - ref) < std::fabs(u8 - ref) + 1e-14);
  CHECK(std::fabs(u16 - ref) < 1e-4);
  CHECK(s64.tail_indicator() < s8.tail_indicator());

  // per-mode residual: each retained mode solves its scalar equation
  UniformGrid grid{1.0, 128};
  ResidualReport rep = residual_report(s64.modes[0], grid, 0.2);
  CHECK(rep.pass);
}

TEST_CASE("separable source term feeds every mode") {
  auto sp = half_period();
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 1.5;
  prob.beta = 0.5;
  prob.gamma = 0.5;
  prob.t_end = 1.0;
  SeparableTerm term;
  term.g = SourceTerm::exponential(-1.0);
  term.h = SpatialData::from_coeffs({2.0, -1.0});
  prob.f_terms.push_back(term);
  prob.truncation = 2;
  SeriesSolution s = solve_pde(prob, sp);

  CHECK(s.data[0].f_coef(0.5) ==
        doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-13));
  CHECK(s.data[1].f_coef(0.5) ==
        doctest::Approx(-std::exp(-0.5)).epsilon(1e-13));
  // zero data + source: pure Duhamel response per mode
  CHECK(s.modes[0].C1 == 0.0);
  CHECK(s.modes[0].C2 == 0.0);
  CHECK(eval_series(s, 0.8, 1.3) != 0.0);
}

TEST_CASE("a degenerate retained mode aborts the whole solve") {
  auto sp = half_period();
  PdeProblem prob;
  prob.family = Family::inner_boundary;
  prob.alpha = 2.0;
  prob.beta = 0.0;
  prob.gamma = 1.0;
  prob.a = M_PI / 2.0;  // mode 1 has m = 1: rows become parallel
  prob.b = M_PI;
  prob.t_end = 4.0;
  prob.u1 = SpatialData::from_coeffs({1.0});
  prob.truncation = 1;
  bool caught = false;
  try {
    solve_pde(prob, sp);
  } catch (const DegenerateMode& e) {
    caught = true;
    CHECK(e.xi == 1);
    CHECK(!e.report.solvable);
  }
  CHECK(caught);
}

TEST_CASE("serial and parallel solves agree exactly") {
  auto sp = half_period();
  PdeProblem prob;
  prob.family = Family::cauchy;
  prob.alpha = 1.6;
  prob.beta = 0.2;
  prob.gamma = 0.6;
  prob.t_end = 1.0;
  prob.u1 = SpatialData::from_function(
      [](double x) { return x * (M_PI - x); });
  prob.truncation = 12;
  SeriesSolution sp_par = solve_pde(prob, sp, Exec::parallel);
  SeriesSolution sp_ser = solve_pde(prob, sp, Exec::serial);
  for (int k = 0; k < 12; ++k) {
    CHECK(sp_par.modes[k].C1 == sp_ser.modes[k].C1);
    CHECK(sp_par.modes[k].C2 == sp_ser.modes[k].C2);
  }
}

TEST_CASE("tabulated spectrum: validation and midpoint inner products") {
  int nq = 400;
  std::vector<double> qx(nq), qw(nq, M_PI / nq);
  for (int i = 0; i < nq; ++i) qx[i] = (i + 0.5) * M_PI / nq;
  auto ef = [](int xi, double x) {
    return std::sqrt(2.0 / M_PI) * std::sin(xi * x);
  };
  TabulatedSpectrum tab({1.0, 4.0}, ef, qx, qw, 0.0, M_PI);
  CHECK(tab.eigenvalue(2) == 4.0);
  CHECK_THROWS_AS(tab.eigenvalue(3), DomainError);
  CHECK(tab.inner_product([&](double x) { return ef(1, x); }, 1) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(tab.inner_product([&](double x) { return ef(1, x); }, 2) ==
        doctest::Approx(0.0).epsilon(1e-4));
  CHECK_THROWS_AS(
      TabulatedSpectrum({-1.0}, ef, qx, qw, 0.0, M_PI), DomainError);
}
