#include "fracwave/io.hpp"

#include <cstdio>

namespace fracwave {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const ScalarSolution& sol) {
  json src{{"kind", sol.f.tag()}};
  if (!sol.f.params().empty()) src["params"] = sol.f.params();
  return json{{"family", family_name(sol.family)},
              {"alpha", sol.eq.alpha},
              {"m", sol.eq.m},
              {"t_end", sol.eq.t_end},
              {"C1", sol.C1},
              {"C2", sol.C2},
              {"source", src}};
}

json to_json(const ConditionReport& rep) {
  return json{{"matrix", {{rep.matrix[0][0], rep.matrix[0][1]},
                          {rep.matrix[1][0], rep.matrix[1][1]}}},
              {"rhs", {rep.rhs[0], rep.rhs[1]}},
              {"det", rep.det},
              {"power_free_lhs", rep.power_free_lhs},
              {"power_free_rhs", rep.power_free_rhs},
              {"rel_margin", rep.rel_margin},
              {"solvable", rep.solvable}};
}

json to_json(const ResidualReport& rep) {
  return json{{"sup_abs", rep.sup_abs},
              {"sup_rel", rep.sup_rel},
              {"tol", rep.tol},
              {"t_min", rep.t_min},
              {"pass", rep.pass}};
}

json to_json(const SeriesSolution& s) {
  json modes = json::array();
  for (int i = 0; i < s.truncation; ++i)
    modes.push_back(json{{"xi", s.data[i].xi},
                         {"m_xi", s.spectrum->eigenvalue(s.data[i].xi)},
                         {"C1", s.modes[i].C1},
                         {"C2", s.modes[i].C2}});
  return json{{"family", family_name(s.family)},
              {"alpha", s.alpha},
              {"beta", s.beta},
              {"gamma", s.gamma},
              {"a", s.a},
              {"b", s.b},
              {"N", s.truncation},
              {"modes", modes}};
}

}  // namespace fracwave
