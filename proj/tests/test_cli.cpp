#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// Paths injected by the build: the installed CLI binary and the shipped
// example configs.
#ifndef FRACWAVE_CLI_BIN
#error "FRACWAVE_CLI_BIN must be defined"
#endif
#ifndef FRACWAVE_CONFIG_DIR
#error "FRACWAVE_CONFIG_DIR must be defined"
#endif

namespace {

using nlohmann::json;

struct Scratch {
  std::string dir;
  Scratch() {
    char tmpl[] = "/tmp/fracwave_cli_XXXXXX";
    dir = mkdtemp(tmpl);
  }
  ~Scratch() {
    int rc = std::system(("rm -rf " + dir).c_str());
    (void)rc;
  }
};

// run the CLI inside `dir`, return the process exit code
int run(const std::string& dir, const std::string& args) {
  std::string cmd = "cd " + dir + " && " + FRACWAVE_CLI_BIN + " " + args +
                    " > stdout.txt 2> stderr.txt";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string config(const char* name) {
  return std::string(FRACWAVE_CONFIG_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("ml eval prints the value and exits 0") {
  Scratch s;
  CHECK(run(s.dir, "ml eval --alpha 1.5 --beta 1.5 --z -1") == 0);
  json out = json::parse(slurp(s.dir + "/stdout.txt"));
  CHECK(std::fabs(out["value"].get<double>() - 0.70652803706417579) < 1e-13);
  CHECK(out["est_abs_error"].get<double>() < 1e-12);
}

TEST_CASE("classical Cauchy config: cosine run hits -1 at t = pi") {
  Scratch s;
  CHECK(run(s.dir, "solve scalar --config " + config("cauchy_classical.json")) ==
        0);
  // csv row at t = pi (sample 101 of 201 on [0, 2 pi])
  std::ifstream csv(s.dir + "/cauchy_classical.csv");
  REQUIRE(csv.good());
  std::string line;
  std::getline(csv, line);
  CHECK(line == "t,u,I_beta_u,D_gamma_u");
  bool found = false;
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string t_str, u_str;
    std::getline(row, t_str, ',');
    std::getline(row, u_str, ',');
    double t = std::stod(t_str);
    if (std::fabs(t - M_PI) < 1e-9) {
      CHECK(std::fabs(std::stod(u_str) - (-1.0)) < 1e-8);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("verify on the classical Cauchy config passes with h = 1e-3") {
  Scratch s;
  CHECK(run(s.dir, "verify --config " + config("cauchy_classical.json")) == 0);
  json rep = json::parse(slurp(s.dir + "/cauchy_classical_residual.json"));
  CHECK(rep["pass"].get<bool>());
  CHECK(rep["sup_abs"].get<double>() < 1e-2);

  // the --grid-n override still verifies on a coarser grid
  CHECK(run(s.dir, "verify --grid-n 500 --config " +
                       config("cauchy_classical.json")) == 0);
}

TEST_CASE("inner config: solve and verify succeed, reports byte-stable") {
  Scratch s;
  std::string cfg = config("inner_verified.json");
  CHECK(run(s.dir, "solve scalar --config " + cfg) == 0);
  CHECK(run(s.dir, "verify --config " + cfg) == 0);
  std::vector<std::string> artifacts = {
      "inner_verified.csv", "inner_verified_solution.json",
      "inner_verified_conditions.json", "inner_verified_residual.json"};
  std::vector<std::string> first;
  for (const auto& a : artifacts) first.push_back(slurp(s.dir + "/" + a));
  // second consecutive run must reproduce every report byte for byte
  CHECK(run(s.dir, "solve scalar --config " + cfg) == 0);
  CHECK(run(s.dir, "verify --config " + cfg) == 0);
  for (size_t i = 0; i < artifacts.size(); ++i)
    CHECK(slurp(s.dir + "/" + artifacts[i]) == first[i]);
}

TEST_CASE("degenerate inner-boundary config exits 3 with det ~ 0") {
  Scratch s;
  std::string cfg = config("inner_boundary_degenerate.json");
  CHECK(run(s.dir, "solve scalar --config " + cfg) == 3);
  json rep = json::parse(slurp(s.dir + "/inner_boundary_degenerate_conditions.json"));
  CHECK(std::fabs(rep["det"].get<double>()) < 1e-12);
  CHECK(!rep["solvable"].get<bool>());
  json diag = json::parse(slurp(s.dir + "/stderr.txt"));
  CHECK(diag["error"] == "degenerate");
  // byte-stable degenerate report as well
  std::string first = slurp(s.dir + "/inner_boundary_degenerate_conditions.json");
  CHECK(run(s.dir, "solve scalar --config " + cfg) == 3);
  CHECK(slurp(s.dir + "/inner_boundary_degenerate_conditions.json") == first);
}

TEST_CASE("configuration errors exit 2 with a structured diagnostic") {
  Scratch s;
  CHECK(run(s.dir, "solve scalar --config no_such_file.json") == 2);
  json diag = json::parse(slurp(s.dir + "/stderr.txt"));
  CHECK(diag["error"] == "config");

  // invalid JSON
  { std::ofstream bad(s.dir + "/bad.json"); bad << "{ not json"; }
  CHECK(run(s.dir, "solve scalar --config bad.json") == 2);

  // parameter outside the admissible range
  {
    std::ofstream bad(s.dir + "/range.json");
    bad << R"({"family":"cauchy","alpha":2.5,"m":-1.0,"t_end":1.0,)"
        << R"("beta":0.0,"gamma":1.0})";
  }
  CHECK(run(s.dir, "solve scalar --config range.json") == 2);

  // unknown flags
  CHECK(run(s.dir, "solve scalar --bogus 1") == 2);
}

TEST_CASE("pde solve writes a t,x,u table") {
  Scratch s;
  {
    std::ofstream cfg(s.dir + "/pde.json");
    cfg << R"({
      "family": "cauchy",
      "alpha": 2.0, "beta": 0.0, "gamma": 1.0, "t_end": 1.0,
      "operator": {"type": "dirichlet_laplacian_1d", "length": 3.141592653589793},
      "u1": {"coeffs": [1.0]},
      "numerics": {"truncation": 4, "t_samples": 5, "x_samples": 5},
      "output": {"csv": "pde.csv", "solution": "pde_solution.json"}
    })";
  }
  CHECK(run(s.dir, "solve pde --config pde.json") == 0);
  std::ifstream csv(s.dir + "/pde.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,x,u");
  json sol = json::parse(slurp(s.dir + "/pde_solution.json"));
  CHECK(sol["modes"].size() == 4);
  // single-mode wave: C2 of mode 1 is the datum, higher modes are silent
  CHECK(sol["modes"][0]["C2"].get<double>() == 1.0);
  CHECK(sol["modes"][1]["C2"].get<double>() == 0.0);
}
