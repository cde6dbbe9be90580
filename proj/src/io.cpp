#include "entdetect/io.hpp"

#include <fstream>

#include "entdetect/errors.hpp"

namespace entdetect {
namespace io {

using nlohmann::json;

json complex_matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_to_json(const BipartiteState& state) {
  return json{{"dA", state.dim_a},
              {"dB", state.dim_b},
              {"rho", complex_matrix_to_json(state.rho)}};
}

BipartiteState state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dA") || !j.contains("dB") ||
      !j.contains("rho")) {
    throw InvalidStateError("state file: expected object with dA, dB, rho");
  }
  if (!j["dA"].is_number_integer() || !j["dB"].is_number_integer()) {
    throw InvalidStateError("state file: dA and dB must be integers");
  }
  const int da = j["dA"].get<int>();
  const int db = j["dB"].get<int>();
  if (da < 2 || db < 2) {
    throw InvalidStateError("state file: dimensions must be >= 2");
  }
  const int n = da * db;
  const json& rows = j["rho"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw InvalidStateError("state file: rho must have dA*dB rows");
  }
  ComplexMatrix rho(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InvalidStateError("state file: rho row " + std::to_string(i) +
                              " must have dA*dB entries");
    }
    for (int k = 0; k < n; ++k) {
      const json& entry = row[k];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw InvalidStateError("state file: entries must be [re, im] pairs");
      }
      rho(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return make_state(da, db, std::move(rho));
}

BipartiteState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open state file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidStateError("state file " + path + ": " + e.what());
  }
  return state_from_json(j);
}

void write_state_file(const std::string& path, const BipartiteState& state) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open output file: " + path);
  }
  out << state_to_json(state).dump(2) << "\n";
  if (!out) {
    throw IoError("failed writing state file: " + path);
  }
}

json report_to_json(const criteria::CriterionReport& report) {
  return json{{"criterion", report.criterion},
              {"statistic", report.statistic},
              {"bound", report.bound},
              {"margin", report.margin},
              {"verdict", criteria::to_string(report.verdict)}};
}

json observation2_to_json(const criteria::Observation2Report& report) {
  // Top-level numbers come from the binding side (the larger margin).
  const criteria::CriterionReport& binding =
      report.lower.margin >= report.upper.margin ? report.lower : report.upper;
  json j = report_to_json(binding);
  j["verdict"] = criteria::to_string(report.verdict);
  j["upper"] = report_to_json(report.upper);
  j["lower"] = report_to_json(report.lower);
  return j;
}

}  // namespace io
}  // namespace entdetect
