#pragma once

#include <string>

#include <json.hpp>

#include "entdetect/bloch.hpp"
#include "entdetect/criteria.hpp"

namespace entdetect {
namespace io {

// State file schema: {"dA": int, "dB": int, "rho": [[[re, im], ...], ...]},
// rho row-major over the composite index i_A * dB + i_B.
nlohmann::json state_to_json(const BipartiteState& state);
BipartiteState state_from_json(const nlohmann::json& j);

BipartiteState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const BipartiteState& state);

nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);
nlohmann::json real_matrix_to_json(const RealMatrix& m);

nlohmann::json report_to_json(const criteria::CriterionReport& report);
nlohmann::json observation2_to_json(const criteria::Observation2Report& report);

}  // namespace io
}  // namespace entdetect
