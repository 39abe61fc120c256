#include "eigensolver/io.hpp"

#include <fstream>

namespace eigensolver {

using nlohmann::json;

namespace {

Exponent exponent_from_json(const json& j, int dim) {
  if (!j.is_array()) throw ParseError("exponent must be an array");
  Exponent e = j.get<Exponent>();
  if (dim >= 0 && static_cast<int>(e.size()) != dim) throw ParseError("exponent has wrong length");
  for (int v : e)
    if (v < 0) throw ParseError("exponent entries must be nonnegative");
  return e;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const InvalidSupport& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"re", c.real()}, {"im", c.imag()}});
  return {{"dim", p.dim()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
      throw ParseError("polynomial needs 'dim' and 'terms'");
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw ParseError("polynomial dimension must be positive");
    std::map<Exponent, Complex> terms;
    for (const auto& t : j.at("terms")) {
      Exponent e = exponent_from_json(t.at("exp"), dim);
      const double re = t.value("re", 0.0);
      const double im = t.value("im", 0.0);
      terms[e] += Complex(re, im);
    }
    return Polynomial(dim, terms);
  });
}

json system_to_json(const PolySystem& F, const SystemStructure& s) {
  json polys = json::array();
  for (const auto& f : F) polys.push_back(polynomial_to_json(f));
  json j = {{"dim", system_dim(F)}, {"polynomials", polys}};
  json st = json::object();
  if (s.polytope) st["polytope"] = *s.polytope;
  if (s.degrees) st["degrees"] = *s.degrees;
  if (s.partition) st["partition"] = *s.partition;
  if (s.polytopes) st["polytopes"] = *s.polytopes;
  if (s.degree_matrix) st["degree_matrix"] = *s.degree_matrix;
  if (!st.empty()) j["structure"] = st;
  return j;
}

SystemFile system_from_json(const json& j) {
  return guarded([&] {
    SystemFile out;
    const json* polys = nullptr;
    if (j.is_array()) {
      polys = &j;
    } else if (j.is_object() && j.contains("polynomials")) {
      polys = &j.at("polynomials");
    } else {
      throw ParseError("system needs a 'polynomials' array");
    }
    for (const auto& p : *polys) out.F.push_back(polynomial_from_json(p));
    if (out.F.empty()) throw ParseError("system has no polynomials");
    try {
      system_dim(out.F);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (j.is_object() && j.contains("structure")) {
      const json& s = j.at("structure");
      if (s.contains("polytope")) out.structure.polytope = s.at("polytope").get<std::vector<Exponent>>();
      if (s.contains("degrees")) out.structure.degrees = s.at("degrees").get<std::vector<int>>();
      if (s.contains("partition")) out.structure.partition = s.at("partition").get<std::vector<int>>();
      if (s.contains("polytopes"))
        out.structure.polytopes = s.at("polytopes").get<std::vector<std::vector<Exponent>>>();
      if (s.contains("degree_matrix")) out.structure.degree_matrix = s.at("degree_matrix").get<DegreeMatrix>();
    }
    return out;
  });
}

json support_to_json(const Support& s) { return json(s.exponents()); }

Support support_from_json(const json& j, int dim) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("support must be an array of exponents");
    std::vector<Exponent> exps;
    for (const auto& e : j) exps.push_back(exponent_from_json(e, dim));
    return Support(dim, std::move(exps));
  });
}

json tuple_to_json(const AdmissibleTuple& t) {
  json E = json::array();
  for (const auto& e : t.E) E.push_back(support_to_json(e));
  return {{"dim", t.D.dim()},
          {"A0", support_to_json(t.A0)},
          {"E", E},
          {"D", support_to_json(t.D)},
          {"family", family_name(t.family)}};
}

AdmissibleTuple tuple_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("A0") || !j.contains("E") || !j.contains("D"))
      throw ParseError("tuple needs 'A0', 'E' and 'D'");
    int dim = j.value("dim", -1);
    if (dim < 0) {
      if (j.at("A0").empty()) throw ParseError("tuple dimension cannot be inferred");
      dim = static_cast<int>(j.at("A0").at(0).size());
    }
    AdmissibleTuple t;
    t.A0 = support_from_json(j.at("A0"), dim);
    for (const auto& e : j.at("E")) t.E.push_back(support_from_json(e, dim));
    if (t.E.size() < 2) throw ParseError("tuple needs E0 and at least one E_i");
    t.D = support_from_json(j.at("D"), dim);
    try {
      t.family = family_from_name(j.value("family", std::string("custom")));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    return t;
  });
}

json report_to_json(const SolveReport& r) {
  json sols = json::array();
  for (const auto& s : r.solutions) {
    std::vector<double> re, im;
    for (const auto& c : s.z) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    sols.push_back({{"re", re}, {"im", im}, {"bwe", s.bwe}});
  }
  const auto& o = r.tolerances;
  return {{"solutions", sols},
          {"gamma", r.gamma},
          {"d_size", r.d_size},
          {"candidates_total", r.candidates_total},
          {"f0_draws", r.f0_draws},
          {"timings", r.timings},
          {"seed", r.seed},
          {"tolerances",
           {{"rtol", o.rtol},
            {"cluster_tol", o.cluster_tol},
            {"eigenspace_tol", o.eigenspace_tol},
            {"bwe_threshold", o.bwe_threshold},
            {"merge_tol", o.merge_tol},
            {"compression_factor", o.compression_factor},
            {"max_f0_redraws", o.max_f0_redraws}}},
          {"diagnostics", r.diagnostics}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace eigensolver
