#include "fracwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fracwave/errors.hpp"
#include "fracwave/parallel.hpp"

namespace fracwave {

namespace {

constexpr int kGaussN = 8;
constexpr double kGaussX[kGaussN] = {
    0.019855071751231884, 0.101666761293186630, 0.237233795041835507,
    0.408282678752175098, 0.591717321247824902, 0.762766204958164493,
    0.898333238706813370, 0.980144928248768116};
constexpr double kGaussW[kGaussN] = {
    0.050614268145188130, 0.111190517226687235, 0.156853322938943644,
    0.181341891689180991, 0.181341891689180991, 0.156853322938943644,
    0.111190517226687235, 0.050614268145188130};

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

DirichletLaplacian1D::DirichletLaplacian1D(double length) : length_(length) {
  if (!(length > 0.0))
    throw DomainError("DirichletLaplacian1D: length must be positive");
}

double DirichletLaplacian1D::eigenvalue(int xi) const {
  if (xi < 1) throw DomainError("eigenvalue: index starts at 1");
  double k = xi * M_PI / length_;
  return k * k;
}

double DirichletLaplacian1D::eigenfunction(int xi, double x) const {
  return std::sqrt(2.0 / length_) * std::sin(xi * M_PI * x / length_);
}

double DirichletLaplacian1D::inner_product(const SpatialFn& g, int xi) const {
  // >= 4 quadrature points per wavelength of the highest oscillation
  int panels = std::max(16, 4 * xi);
  double hp = length_ / panels;
  KahanSum acc;
  for (int p = 0; p < panels; ++p) {
    double x0 = p * hp;
    for (int i = 0; i < kGaussN; ++i) {
      double x = x0 + hp * kGaussX[i];
      double v = g(x) * eigenfunction(xi, x);
      if (!std::isfinite(v))
        throw QuadratureFailure("inner_product: non-finite integrand");
      acc.add(kGaussW[i] * hp * v);
    }
  }
  return acc.s;
}

std::string DirichletLaplacian1D::describe() const {
  return "dirichlet_laplacian_1d(L=" + std::to_string(length_) + ")";
}

TabulatedSpectrum::TabulatedSpectrum(
    std::vector<double> eigenvalues,
    std::function<double(int, double)> eigenfunction,
    std::vector<double> quad_nodes, std::vector<double> quad_weights,
    double x0, double x1)
    : eigenvalues_(std::move(eigenvalues)),
      ef_(std::move(eigenfunction)),
      qx_(std::move(quad_nodes)),
      qw_(std::move(quad_weights)),
      x0_(x0),
      x1_(x1) {
  if (eigenvalues_.empty() || qx_.size() != qw_.size())
    throw DomainError("TabulatedSpectrum: bad construction data");
  for (double m : eigenvalues_)
    if (!(m > 0.0))
      throw DomainError("TabulatedSpectrum: spectrum must be positive");
}

double TabulatedSpectrum::eigenvalue(int xi) const {
  if (xi < 1 || xi > static_cast<int>(eigenvalues_.size()))
    throw DomainError("eigenvalue: index out of tabulated range");
  return eigenvalues_[xi - 1];
}

double TabulatedSpectrum::eigenfunction(int xi, double x) const {
  return ef_(xi, x);
}

double TabulatedSpectrum::inner_product(const SpatialFn& g, int xi) const {
  KahanSum acc;
  for (std::size_t i = 0; i < qx_.size(); ++i) {
    double v = g(qx_[i]) * ef_(xi, qx_[i]);
    if (!std::isfinite(v))
      throw QuadratureFailure("inner_product: non-finite integrand");
    acc.add(qw_[i] * v);
  }
  return acc.s;
}

std::string TabulatedSpectrum::describe() const {
  return "tabulated(" + std::to_string(eigenvalues_.size()) + " modes)";
}

DegenerateMode::DegenerateMode(int xi_, ConditionReport rep)
    : DegenerateSystem("degenerate condition system at mode " +
                       std::to_string(xi_)),
      xi(xi_),
      report(rep) {}

SpatialData SpatialData::from_coeffs(std::vector<double> c) {
  SpatialData d;
  d.coeffs = std::move(c);
  return d;
}

SpatialData SpatialData::from_function(SpatialFn f) {
  SpatialData d;
  d.fn = std::move(f);
  return d;
}

double SeriesSolution::tail_indicator() const {
  if (data.empty()) return 0.0;
  const ModeData& last = data.back();
  return std::max(std::fabs(last.u1_coef), std::fabs(last.u2_coef));
}

std::vector<double> project(const SpatialFn& g, int n_modes,
                            const SpectrumProvider& sp) {
  if (n_modes < 1) throw DomainError("project: need at least one mode");
  std::vector<double> c(n_modes);
  for (int xi = 1; xi <= n_modes; ++xi) c[xi - 1] = sp.inner_product(g, xi);
  return c;
}

namespace {

std::vector<double> resolve_coeffs(const SpatialData& d, int n_modes,
                                   const SpectrumProvider& sp) {
  std::vector<double> c(n_modes, 0.0);
  if (!d.coeffs.empty()) {
    for (int i = 0; i < n_modes && i < static_cast<int>(d.coeffs.size()); ++i)
      c[i] = d.coeffs[i];
  } else if (d.fn) {
    c = project(d.fn, n_modes, sp);
  }
  return c;
}

}  // namespace

SeriesSolution solve_pde(const PdeProblem& prob,
                         std::shared_ptr<const SpectrumProvider> sp,
                         Exec exec) {
  if (!sp) throw DomainError("solve_pde: null spectrum provider");
  const int N = prob.truncation;
  if (N < 1) throw DomainError("solve_pde: truncation must be >= 1");

  SeriesSolution s;
  s.family = prob.family;
  s.alpha = prob.alpha;
  s.beta = prob.beta;
  s.gamma = prob.gamma;
  s.a = prob.a;
  s.b = prob.b;
  s.t_end = prob.t_end;
  s.truncation = N;
  s.spectrum = sp;
  s.data.resize(N);
  s.modes.resize(N);

  std::vector<double> c1 = resolve_coeffs(prob.u1, N, *sp);
  std::vector<double> c2 = resolve_coeffs(prob.u2, N, *sp);
  std::vector<std::vector<double>> hc(prob.f_terms.size());
  for (std::size_t i = 0; i < prob.f_terms.size(); ++i)
    hc[i] = resolve_coeffs(prob.f_terms[i].h, N, *sp);

  for (int xi = 1; xi <= N; ++xi) {
    ModeData& md = s.data[xi - 1];
    md.xi = xi;
    md.u1_coef = c1[xi - 1];
    md.u2_coef = c2[xi - 1];
    bool any = false;
    for (std::size_t i = 0; i < prob.f_terms.size(); ++i)
      if (hc[i][xi - 1] != 0.0 && !prob.f_terms[i].g.is_zero()) any = true;
    if (any) {
      std::vector<std::pair<double, SourceTerm>> parts;
      for (std::size_t i = 0; i < prob.f_terms.size(); ++i)
        if (hc[i][xi - 1] != 0.0 && !prob.f_terms[i].g.is_zero())
          parts.emplace_back(hc[i][xi - 1], prob.f_terms[i].g);
      md.f_coef = SourceTerm::callable("mode_projection", [parts](double t) {
        double v = 0.0;
        for (const auto& [c, g] : parts) v += c * g(t);
        return v;
      });
    }
  }

  const int nthreads = exec == Exec::parallel ? worker_count() : 1;
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (int xi = 1; xi <= N; ++xi) {
    try {
      const ModeData& md = s.data[xi - 1];
      EquationParams eq{prob.alpha, -sp->eigenvalue(xi), prob.t_end};
      switch (prob.family) {
        case Family::cauchy: {
          CauchySpec cs{eq,          prob.beta,   prob.gamma, md.u1_coef,
                        md.u2_coef,  md.f_coef,   prob.quad_n};
          s.modes[xi - 1] = solve_cauchy(cs);
          break;
        }
        case Family::inner: {
          InnerSpec is{eq,         prob.beta, prob.gamma,  prob.a,
                       md.u1_coef, md.u2_coef, md.f_coef,  prob.quad_n};
          ConditionReport rep = build_condition_system(is);
          if (!rep.solvable) throw DegenerateMode(xi, rep);
          s.modes[xi - 1] = solve_inner(is);
          break;
        }
        case Family::inner_boundary: {
          InnerBoundarySpec ib{eq,     prob.beta,  prob.gamma, prob.a,
                               prob.b, md.u1_coef, md.u2_coef, md.f_coef,
                               prob.quad_n};
          ConditionReport rep = build_condition_system(ib);
          if (!rep.solvable) throw DegenerateMode(xi, rep);
          s.modes[xi - 1] = solve_inner_boundary(ib);
          break;
        }
      }
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return s;
}

double eval_series(const SeriesSolution& s, double t, double x) {
  KahanSum acc;
  for (int i = 0; i < s.truncation; ++i)
    acc.add(s.modes[i].eval(t) * s.spectrum->eigenfunction(s.data[i].xi, x));
  return acc.s;
}

double h_norm_at_time(const SeriesSolution& s, double t) {
  KahanSum acc;
  for (const ScalarSolution& mode : s.modes) {
    double u = mode.eval(t);
    acc.add(u * u);
  }
  return std::sqrt(acc.s);
}

double chi(double t, double alpha) {
  if (t < 0.0) throw DomainError("chi: t must be nonnegative");
  if (t >= 1.0) return 1.0;
  return std::pow(t, 2.0 * (2.0 - alpha));
}

namespace {

// int_0^T chi(t) * sum_xi w_xi(t)^2 dt with w per-mode selected by kind
double weighted_norm_sq(const SeriesSolution& s, StabilityKind kind,
                        double t_end, int time_quad_n, Exec exec) {
  if (time_quad_n < 16)
    throw DomainError("weighted norm: time_quad_n must be >= 16");
  // composite Gauss; split at the chi kink t=1 when it is interior
  struct Seg {
    double a, b;
    int panels;
  };
  std::vector<Seg> segs;
  if (t_end <= 1.0) {
    segs.push_back({0.0, t_end, time_quad_n});
  } else {
    int p0 = std::max(8, static_cast<int>(time_quad_n / t_end));
    segs.push_back({0.0, 1.0, p0});
    segs.push_back({1.0, t_end, std::max(8, time_quad_n - p0)});
  }
  std::vector<double> nodes, weights;
  for (const Seg& sg : segs) {
    double hp = (sg.b - sg.a) / sg.panels;
    for (int p = 0; p < sg.panels; ++p)
      for (int i = 0; i < kGaussN; ++i) {
        nodes.push_back(sg.a + (p + kGaussX[i]) * hp);
        weights.push_back(kGaussW[i] * hp);
      }
  }
  const int nq = static_cast<int>(nodes.size());
  std::vector<double> contrib(nq);
  const int nthreads = exec == Exec::parallel ? worker_count() : 1;
  bool bad = false;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (int i = 0; i < nq; ++i) {
    double t = nodes[i];
    KahanSum acc;
    for (int k = 0; k < s.truncation; ++k) {
      double u = s.modes[k].eval(t);
      double w;
      switch (kind) {
        case StabilityKind::solution: w = u; break;
        case StabilityKind::operator_term:
          w = s.spectrum->eigenvalue(s.data[k].xi) * u;
          break;
        case StabilityKind::dalpha:
        default:
          // D^alpha u_xi = f_xi - m_xi u_xi, straight from the equation
          w = s.data[k].f_coef(t) -
              s.spectrum->eigenvalue(s.data[k].xi) * u;
          break;
      }
      acc.add(w * w);
    }
    if (!std::isfinite(acc.s)) bad = true;
    contrib[i] = weights[i] * chi(t, s.alpha) * acc.s;
  }
  if (bad) throw QuadratureFailure("weighted norm: non-finite integrand");
  KahanSum total;
  for (double v : contrib) total.add(v);
  return total.s;
}

}  // namespace

double weighted_l2_norm(const SeriesSolution& s, double t_end, int time_quad_n,
                        Exec exec) {
  return std::sqrt(
      weighted_norm_sq(s, StabilityKind::solution, t_end, time_quad_n, exec));
}

double stability_ratio(const SeriesSolution& s, const DataNorms& norms,
                       StabilityKind kind, double t_end, int time_quad_n) {
  double denom = norms.u1 * norms.u1 + norms.u2 * norms.u2 + norms.f * norms.f;
  if (denom == 0.0)
    throw DivisionByZero("stability_ratio: all data norms vanish");
  return weighted_norm_sq(s, kind, t_end, time_quad_n, Exec::parallel) / denom;
}

}  // namespace fracwave
