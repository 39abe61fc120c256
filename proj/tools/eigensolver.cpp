#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "eigensolver/bench.hpp"
#include "eigensolver/io.hpp"

using namespace eigensolver;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kRankCondition = 2;
constexpr int kParse = 3;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("EIGENSOLVER_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed EIGENSOLVER_SEED\n";
    }
  }
  return 0;
}

std::vector<int> total_degrees(const PolySystem& F) {
  std::vector<int> d;
  for (const auto& f : F) d.push_back(f.total_degree());
  return d;
}

template <class T>
const T& need(const std::optional<T>& v, const std::string& family, const char* field) {
  if (!v) throw ParseError("family " + family + " needs structure." + field + " in the input file");
  return *v;
}

std::vector<LatticePolytope> polytopes_of(const std::vector<std::vector<Exponent>>& vs) {
  std::vector<LatticePolytope> out;
  for (const auto& v : vs) {
    if (v.empty()) throw ParseError("empty polytope in structure.polytopes");
    out.emplace_back(Support(static_cast<int>(v[0].size()), v));
  }
  return out;
}

struct SolveArgs {
  std::string input, family, tuple, save_tuple, output;
  double rtol = 1e-8, cluster_tol = 1e-6, bwe_threshold = 1e-6;
  std::uint64_t seed = 0;
};

int run_solve(const SolveArgs& a) {
  const SystemFile sys = system_from_json(read_json_file(a.input));
  const PolySystem& F = sys.F;
  const int n = system_dim(F);
  Family fam;
  try {
    fam = family_from_name(a.family);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  SolveOptions opts;
  opts.rtol = a.rtol;
  opts.cluster_tol = a.cluster_tol;
  opts.bwe_threshold = a.bwe_threshold;
  opts.seed = a.seed;

  AdmissibleTuple tuple;
  if (!a.tuple.empty()) {
    tuple = tuple_from_json(read_json_file(a.tuple));
  } else {
    const auto& st = sys.structure;
    switch (fam) {
      case Family::dense:
        tuple = tuple_dense(n, st.degrees.value_or(total_degrees(F)));
        break;
      case Family::unmixed:
        tuple = tuple_unmixed(LatticePolytope(Support(n, need(st.polytope, a.family, "polytope"))),
                              need(st.degrees, a.family, "degrees"));
        break;
      case Family::multi_dense:
        tuple = tuple_multi_dense(need(st.partition, a.family, "partition"),
                                  need(st.degree_matrix, a.family, "degree_matrix"));
        break;
      case Family::multi_unmixed:
        tuple = tuple_multi_unmixed(polytopes_of(need(st.polytopes, a.family, "polytopes")),
                                    need(st.degree_matrix, a.family, "degree_matrix"));
        break;
      case Family::mixed:
        tuple = tuple_mixed(supports_of(F));
        break;
      case Family::incremental: {
        const LatticePolytope P =
            st.polytope ? LatticePolytope(Support(n, *st.polytope)) : LatticePolytope::simplex(n);
        Rng rng(a.seed);
        IncrementalOptions io;
        io.cokernel.rtol = a.rtol;
        IncrementalResult inc = incremental_unmixed(F, P, st.degrees.value_or(total_degrees(F)), rng, io);
        tuple = inc.tuple;
        opts.precomputed = Precomputed{inc.cokernel, inc.f0};
        break;
      }
      case Family::custom:
        throw ParseError("family custom needs --tuple");
    }
  }
  if (!a.save_tuple.empty()) write_json_file(a.save_tuple, tuple_to_json(tuple));

  const SolveReport rep = solve(F, tuple, opts);
  const auto j = report_to_json(rep);
  if (a.output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(a.output, j);
    std::cerr << rep.solutions.size() << " solutions, gamma " << rep.gamma << ", #D " << rep.d_size << '\n';
  }
  return kOk;
}

int run_bench(const std::vector<std::string>& scenarios, const BenchOptions& opts, const std::string& output) {
  if (scenarios.empty()) {
    for (const auto& s : bench_registry()) std::cout << s << '\n';
    return kOk;
  }
  for (const auto& s : scenarios) {
    const auto reg = bench_registry();
    if (std::find(reg.begin(), reg.end(), s) == reg.end()) {
      std::cerr << "unknown scenario: " << s << '\n';
      return kParse;
    }
  }
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw std::runtime_error("cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  for (const auto& s : scenarios) {
    if (scenarios.size() > 1) out << "# " << s << '\n';
    run_scenario(s, opts, out);
  }
  return kOk;
}

int run_example(const std::string& name, const std::string& output, const std::string& tuple_out) {
  const auto examples = builtin_examples();
  auto it = examples.find(name);
  if (it == examples.end()) {
    std::cerr << "unknown example: " << name << '\n';
    return kParse;
  }
  const auto j = system_to_json(it->second.F);
  if (output.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(output, j);
  if (!tuple_out.empty()) {
    if (!it->second.tuple) {
      std::cerr << "example " << name << " has no fixed tuple\n";
      return kParse;
    }
    write_json_file(tuple_out, tuple_to_json(*it->second.tuple));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue solver for sparse polynomial systems"};
  app.require_subcommand(1);

  SolveArgs sa;
  sa.seed = default_seed();
  auto* solve_cmd = app.add_subcommand("solve", "Solve a system given as JSON");
  solve_cmd->add_option("--input", sa.input, "System JSON file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--family", sa.family, "dense|unmixed|multi-dense|multi-unmixed|mixed|incremental")
      ->required();
  solve_cmd->add_option("--tuple", sa.tuple, "Reuse a serialized admissible tuple")->check(CLI::ExistingFile);
  solve_cmd->add_option("--save-tuple", sa.save_tuple, "Write the tuple used");
  solve_cmd->add_option("--rtol", sa.rtol, "Relative rank tolerance");
  solve_cmd->add_option("--cluster-tol", sa.cluster_tol, "Eigenvalue clustering tolerance");
  solve_cmd->add_option("--bwe-threshold", sa.bwe_threshold, "Backward error filter");
  solve_cmd->add_option("--seed", sa.seed, "Random seed (default EIGENSOLVER_SEED or 0)");
  solve_cmd->add_option("--output", sa.output, "Report JSON file (default stdout)");

  std::vector<std::string> scenarios;
  BenchOptions bo;
  bo.seed = default_seed();
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Run benchmark scenarios and print CSV");
  bench_cmd->add_option("scenarios", scenarios, "Scenario names; none lists the registry");
  bench_cmd->add_flag("--full", bo.full, "Include the large instances");
  bench_cmd->add_option("--seed", bo.seed, "Random seed");
  bench_cmd->add_option("--output", bench_out, "CSV file (default stdout)");

  std::string ex_name, ex_out, ex_tuple;
  auto* ex_cmd = app.add_subcommand("example", "Write a built-in example system as JSON");
  ex_cmd->add_option("name", ex_name, "running|molecular")->required();
  ex_cmd->add_option("--output", ex_out, "System JSON file (default stdout)");
  ex_cmd->add_option("--tuple", ex_tuple, "Also write the example's fixed tuple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*solve_cmd) return run_solve(sa);
    if (*bench_cmd) return run_bench(scenarios, bo, bench_out);
    return run_example(ex_name, ex_out, ex_tuple);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const RankConditionError& e) {
    std::cerr << "rank condition: " << e.what() << '\n';
    return kRankCondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
