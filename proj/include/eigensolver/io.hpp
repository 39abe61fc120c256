#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "eigensolver/solver.hpp"

namespace eigensolver {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optional structural metadata next to the polynomials; the unmixed and
// multigraded families need it to know P and the degrees.
struct SystemStructure {
  std::optional<std::vector<Exponent>> polytope;
  std::optional<std::vector<int>> degrees;
  std::optional<std::vector<int>> partition;
  std::optional<std::vector<std::vector<Exponent>>> polytopes;
  std::optional<DegreeMatrix> degree_matrix;
};

struct SystemFile {
  PolySystem F;
  SystemStructure structure;
};

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const PolySystem& F, const SystemStructure& s = {});
SystemFile system_from_json(const nlohmann::json& j);

nlohmann::json support_to_json(const Support& s);
Support support_from_json(const nlohmann::json& j, int dim);

nlohmann::json tuple_to_json(const AdmissibleTuple& t);
AdmissibleTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SolveReport& r);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace eigensolver
