#pragma once

#include <string>

#include <json.hpp>

#include "ghwforge/code.hpp"
#include "ghwforge/families.hpp"
#include "ghwforge/set_system.hpp"
#include "ghwforge/solver.hpp"

namespace ghwforge {

// File formats. Field element codes are plain integers; coordinates and row
// indices are 1-based in every file, 0-based in the C++ API.
//
//   field:   {"p":2,"m":2,"modulus":[1,1,1]}
//   matrix:  {"rows":3,"cols":8,"entries":[[...],[...],[...]]}
//   code:    {"field":{...},"n":8,"k":3,"generator":[[...],...]}
//   sets:    {"n":8,"sets":[[4,8],[3,7],[5,6]]}
//   curve:   {"cubic":[c300,c210,c201,c120,c111,c102,c030,c021,c012,c003],
//             "line":[a0,a1,a2]}
//   outcome: {"status":"feasible","generator":[[...]]}
//          | {"status":"infeasible","witness":[1,2,3],"dim":2}

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json subset_system_to_json(const SubsetSystem& s);
SubsetSystem subset_system_from_json(const nlohmann::json& j);

nlohmann::json cubic_to_json(const PlaneCubic& c);
PlaneCubic cubic_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const SolveOutcome& o);

nlohmann::json report_to_json(const ConstraintReport& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace ghwforge
