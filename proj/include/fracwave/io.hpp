#ifndef FRACWAVE_IO_HPP
#define FRACWAVE_IO_HPP

#include <string>

#include <json.hpp>

#include "fracwave/solvers.hpp"
#include "fracwave/spectral.hpp"

namespace fracwave {

nlohmann::json to_json(const ScalarSolution& sol);
nlohmann::json to_json(const ConditionReport& rep);
nlohmann::json to_json(const ResidualReport& rep);
nlohmann::json to_json(const SeriesSolution& s);

// fixed-width float formatting used by the CSV writers (17 significant
// digits, enough to round-trip a double)
std::string format_double(double v);

}  // namespace fracwave

#endif
