// fracwave: batch front-end for the fractional wave solver library.
//
// Subcommands:
//   ml eval --alpha A --beta B --z Z      evaluate E_{alpha,beta}(z)
//   solve scalar --config path            solve one scalar problem
//   solve pde --config path               solve a separable PDE problem
//   verify --config path [--grid-n n]     numeric residual verification
//
// Exit codes: 0 success, 2 configuration/validation error, 3 degenerate
// condition system, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracwave/errors.hpp"
#include "fracwave/io.hpp"
#include "fracwave/solvers.hpp"
#include "fracwave/special.hpp"
#include "fracwave/spectral.hpp"

using nlohmann::json;
using namespace fracwave;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerification = 4;

void diagnostic(const std::string& code, const std::string& detail) {
  json d{{"error", code}, {"detail", detail}};
  std::cerr << d.dump() << "\n";
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open config file: " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw SpecError(std::string("config is not valid JSON: ") + e.what());
  }
  return cfg;
}

double need_number(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_number())
    throw SpecError("config: missing numeric field '" + key + "'");
  return cfg[key].get<double>();
}

SourceTerm parse_source_obj(const json& s) {
  std::string tag = s.value("tag", "");
  if (tag == "zero") return SourceTerm::zero();
  if (tag == "constant") return SourceTerm::constant(need_number(s, "c"));
  if (tag == "power") return SourceTerm::power(need_number(s, "p"));
  if (tag == "exp") return SourceTerm::exponential(need_number(s, "k"));
  if (tag == "table") {
    if (!s.contains("file"))
      throw SpecError("config: table source needs a 'file' field");
    std::ifstream in(s["file"].get<std::string>());
    if (!in)
      throw SpecError("config: cannot open table file " +
                      s["file"].get<std::string>());
    std::vector<double> t, v;
    double a, b;
    while (in >> a >> b) {
      t.push_back(a);
      v.push_back(b);
    }
    return SourceTerm::table(std::move(t), std::move(v));
  }
  throw SpecError("config: unknown source tag '" + tag + "'");
}

SourceTerm parse_source(const json& cfg) {
  if (!cfg.contains("source")) return SourceTerm::zero();
  return parse_source_obj(cfg["source"]);
}

struct ScalarProblem {
  Family family;
  ScalarSolution solution;  // filled after solving
  CauchySpec cauchy;
  InnerSpec inner;
  InnerBoundarySpec inner_boundary;
};

Family parse_family(const json& cfg) {
  std::string f = cfg.value("family", "");
  if (f == "cauchy") return Family::cauchy;
  if (f == "inner") return Family::inner;
  if (f == "inner_boundary") return Family::inner_boundary;
  throw SpecError("config: family must be cauchy, inner or inner_boundary");
}

std::pair<double, double> parse_data(const json& cfg) {
  if (!cfg.contains("data")) return {0.0, 0.0};
  const json& d = cfg["data"];
  if (!d.is_array() || d.size() != 2 || !d[0].is_number() ||
      !d[1].is_number())
    throw SpecError("config: 'data' must be a pair of numbers");
  return {d[0].get<double>(), d[1].get<double>()};
}

ScalarProblem parse_scalar(const json& cfg) {
  ScalarProblem p;
  p.family = parse_family(cfg);
  EquationParams eq{need_number(cfg, "alpha"), need_number(cfg, "m"),
                    need_number(cfg, "t_end")};
  double beta = need_number(cfg, "beta");
  double gamma = need_number(cfg, "gamma");
  auto [d1, d2] = parse_data(cfg);
  SourceTerm f = parse_source(cfg);
  int quad_n = 512;
  if (cfg.contains("numerics"))
    quad_n = cfg["numerics"].value("quad_n", 512);

  switch (p.family) {
    case Family::cauchy:
      p.cauchy = {eq, beta, gamma, d1, d2, f, quad_n};
      p.cauchy.validate();
      break;
    case Family::inner:
      p.inner = {eq, beta, gamma, need_number(cfg, "a"), d1, d2, f, quad_n};
      p.inner.validate();
      break;
    case Family::inner_boundary:
      p.inner_boundary = {eq,     beta, gamma, need_number(cfg, "a"),
                          need_number(cfg, "b"), d1, d2, f, quad_n};
      p.inner_boundary.validate();
      break;
  }
  return p;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot open output file: " + path);
  out << text;
}

void write_json(const json& cfg_output, const std::string& key,
                const json& doc) {
  if (!cfg_output.contains(key)) return;
  write_text(cfg_output[key].get<std::string>(), doc.dump(2) + "\n");
}

// CSV samples for a scalar run: t, u, I_beta_u, D_gamma_u
void write_scalar_csv(const json& cfg, const ScalarSolution& sol, double beta,
                      double gamma) {
  if (!cfg.contains("output") || !cfg["output"].contains("csv")) return;
  int samples = 101;
  if (cfg.contains("numerics")) samples = cfg["numerics"].value("samples", 101);
  if (samples < 2) throw SpecError("config: samples must be >= 2");
  std::string text = "t,u,I_beta_u,D_gamma_u\n";
  const double T = sol.eq.t_end;
  for (int j = 0; j < samples; ++j) {
    double t = T * j / (samples - 1);
    double u, ib, dg;
    try {
      u = sol.eval(t);
    } catch (const SingularAtZero&) {
      u = std::numeric_limits<double>::quiet_NaN();
    }
    try {
      ib = ibeta_of_solution(sol, beta, t);
    } catch (const SingularAtZero&) {
      ib = std::numeric_limits<double>::quiet_NaN();
    }
    try {
      dg = dgamma_of_solution(sol, gamma, t);
    } catch (const SingularAtZero&) {
      dg = std::numeric_limits<double>::quiet_NaN();
    }
    text += format_double(t) + "," + format_double(u) + "," +
            format_double(ib) + "," + format_double(dg) + "\n";
  }
  write_text(cfg["output"]["csv"].get<std::string>(), text);
}

int run_solve_scalar(const json& cfg) {
  ScalarProblem p = parse_scalar(cfg);
  json out = cfg.value("output", json::object());
  ScalarSolution sol;
  double beta, gamma;
  switch (p.family) {
    case Family::cauchy:
      sol = solve_cauchy(p.cauchy);
      beta = p.cauchy.beta;
      gamma = p.cauchy.gamma;
      break;
    case Family::inner: {
      ConditionReport rep = build_condition_system(p.inner);
      write_json(out, "condition_report", to_json(rep));
      if (!rep.solvable) {
        diagnostic("degenerate",
                   "inner condition system is degenerate (det " +
                       format_double(rep.det) + ")");
        return kExitDegenerate;
      }
      sol = solve_inner(p.inner);
      beta = p.inner.beta;
      gamma = p.inner.gamma;
      break;
    }
    case Family::inner_boundary: {
      ConditionReport rep = build_condition_system(p.inner_boundary);
      write_json(out, "condition_report", to_json(rep));
      if (!rep.solvable) {
        diagnostic("degenerate",
                   "inner-boundary condition system is degenerate (det " +
                       format_double(rep.det) + ")");
        return kExitDegenerate;
      }
      sol = solve_inner_boundary(p.inner_boundary);
      beta = p.inner_boundary.beta;
      gamma = p.inner_boundary.gamma;
      break;
    }
  }
  write_json(out, "solution", to_json(sol));
  write_scalar_csv(cfg, sol, beta, gamma);
  return kExitOk;
}

SpatialData parse_spatial(const json& cfg, const std::string& key,
                          double length) {
  if (!cfg.contains(key)) return SpatialData::zero();
  const json& s = cfg[key];
  if (s.contains("coeffs")) {
    std::vector<double> c = s["coeffs"].get<std::vector<double>>();
    return SpatialData::from_coeffs(std::move(c));
  }
  std::string tag = s.value("tag", "");
  if (tag == "zero") return SpatialData::zero();
  if (tag == "parabola")  // x (L - x), the classic smooth bump
    return SpatialData::from_function(
        [length](double x) { return x * (length - x); });
  throw SpecError("config: spatial data '" + key +
                  "' needs 'coeffs' or a known tag");
}

int run_solve_pde(const json& cfg) {
  if (!cfg.contains("operator") ||
      cfg["operator"].value("type", "") != "dirichlet_laplacian_1d")
    throw SpecError("config: operator.type must be dirichlet_laplacian_1d");
  double length = need_number(cfg["operator"], "length");
  auto sp = std::make_shared<DirichletLaplacian1D>(length);

  PdeProblem prob;
  prob.family = parse_family(cfg);
  prob.alpha = need_number(cfg, "alpha");
  prob.beta = need_number(cfg, "beta");
  prob.gamma = need_number(cfg, "gamma");
  prob.t_end = need_number(cfg, "t_end");
  if (prob.family != Family::cauchy) prob.a = need_number(cfg, "a");
  if (prob.family == Family::inner_boundary) prob.b = need_number(cfg, "b");
  prob.u1 = parse_spatial(cfg, "u1", length);
  prob.u2 = parse_spatial(cfg, "u2", length);
  if (cfg.contains("f_terms")) {
    for (const json& term : cfg["f_terms"]) {
      SeparableTerm st;
      if (!term.contains("g"))
        throw SpecError("config: each f_terms entry needs a 'g' source");
      st.g = parse_source_obj(term["g"]);
      st.h = parse_spatial(term, "h", length);
      prob.f_terms.push_back(std::move(st));
    }
  }
  int t_samples = 33, x_samples = 17;
  if (cfg.contains("numerics")) {
    const json& nu = cfg["numerics"];
    prob.truncation = nu.value("truncation", 8);
    prob.quad_n = nu.value("quad_n", 512);
    t_samples = nu.value("t_samples", 33);
    x_samples = nu.value("x_samples", 17);
  }
  if (t_samples < 2 || x_samples < 2)
    throw SpecError("config: t_samples and x_samples must be >= 2");

  SeriesSolution s = solve_pde(prob, sp);
  json out = cfg.value("output", json::object());
  write_json(out, "solution", to_json(s));

  if (out.contains("csv")) {
    std::string text = "t,x,u\n";
    for (int i = 0; i < t_samples; ++i) {
      double t = prob.t_end * i / (t_samples - 1);
      for (int j = 0; j < x_samples; ++j) {
        double x = length * j / (x_samples - 1);
        double u;
        try {
          u = eval_series(s, t, x);
        } catch (const SingularAtZero&) {
          u = std::numeric_limits<double>::quiet_NaN();
        }
        text += format_double(t) + "," + format_double(x) + "," +
                format_double(u) + "\n";
      }
    }
    write_text(out["csv"].get<std::string>(), text);
  }
  return kExitOk;
}

int run_verify(const json& cfg, int grid_n_override) {
  ScalarProblem p = parse_scalar(cfg);
  int grid_n = 1000;
  double t_min = 0.05;
  if (cfg.contains("numerics")) {
    grid_n = cfg["numerics"].value("grid_n", 1000);
    t_min = cfg["numerics"].value("t_min", 0.05);
  }
  if (grid_n_override > 0) grid_n = grid_n_override;

  ScalarSolution sol;
  double t_end;
  switch (p.family) {
    case Family::cauchy:
      sol = solve_cauchy(p.cauchy);
      t_end = p.cauchy.eq.t_end;
      break;
    case Family::inner: {
      ConditionReport rep = build_condition_system(p.inner);
      if (!rep.solvable) {
        diagnostic("degenerate", "condition system is degenerate");
        return kExitDegenerate;
      }
      sol = solve_inner(p.inner);
      t_end = p.inner.eq.t_end;
      break;
    }
    case Family::inner_boundary: {
      ConditionReport rep = build_condition_system(p.inner_boundary);
      if (!rep.solvable) {
        diagnostic("degenerate", "condition system is degenerate");
        return kExitDegenerate;
      }
      sol = solve_inner_boundary(p.inner_boundary);
      t_end = p.inner_boundary.eq.t_end;
      break;
    }
  }
  UniformGrid grid{t_end, grid_n};
  ResidualReport rep = residual_report(sol, grid, t_min);
  json doc = to_json(rep);
  json out = cfg.value("output", json::object());
  write_json(out, "residual_report", doc);
  std::cout << doc.dump(2) << "\n";
  if (!rep.pass) {
    diagnostic("verification", "residual exceeds tolerance (sup_rel " +
                                   format_double(rep.sup_rel) + ")");
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form fractional wave solver"};
  app.require_subcommand(1);

  // ml eval
  CLI::App* ml_cmd = app.add_subcommand("ml", "Mittag-Leffler evaluation");
  ml_cmd->require_subcommand(1);
  CLI::App* ml_eval = ml_cmd->add_subcommand("eval", "evaluate E_{a,b}(z)");
  double a = 0.0, b = 0.0, z = 0.0;
  ml_eval->add_option("--alpha", a, "first parameter, > 0")->required();
  ml_eval->add_option("--beta", b, "second parameter")->required();
  ml_eval->add_option("--z", z, "argument")->required();

  // solve scalar|pde
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a problem");
  solve_cmd->require_subcommand(1);
  std::string scalar_cfg, pde_cfg;
  CLI::App* solve_scalar =
      solve_cmd->add_subcommand("scalar", "scalar equation");
  solve_scalar->add_option("--config", scalar_cfg, "JSON config path")
      ->required();
  CLI::App* solve_pde_cmd =
      solve_cmd->add_subcommand("pde", "separable wave equation");
  solve_pde_cmd->add_option("--config", pde_cfg, "JSON config path")
      ->required();

  // verify
  std::string verify_cfg;
  int grid_n = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "residual verification of a scalar run");
  verify_cmd->add_option("--config", verify_cfg, "JSON config path")
      ->required();
  verify_cmd->add_option("--grid-n", grid_n, "override verification grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (ml_eval->parsed()) {
      MLResult r = ml({a, b, z});
      const char* method =
          r.method == MLMethod::series
              ? "series"
              : (r.method == MLMethod::asymptotic ? "asymptotic"
                                                  : "recurrence_reduced");
      json doc{{"alpha", a},
               {"beta", b},
               {"z", z},
               {"value", r.value},
               {"est_abs_error", r.est_abs_error},
               {"method", method}};
      std::cout << doc.dump(2) << "\n";
      return kExitOk;
    }
    if (solve_scalar->parsed()) return run_solve_scalar(load_config(scalar_cfg));
    if (solve_pde_cmd->parsed()) return run_solve_pde(load_config(pde_cfg));
    if (verify_cmd->parsed()) return run_verify(load_config(verify_cfg), grid_n);
  } catch (const DegenerateSystem& e) {
    diagnostic("degenerate", e.what());
    return kExitDegenerate;
  } catch (const SpecError& e) {
    diagnostic("config", e.what());
    return kExitConfig;
  } catch (const DomainError& e) {
    diagnostic("config", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    diagnostic("internal", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
