#include "eigensolver/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

namespace eigensolver {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join_degrees(const std::vector<int>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ";" : "") + std::to_string(d[i]);
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void fill_bwe(BenchRow& row, const std::vector<Solution>& sols) {
  row.bwe_max = 0.0;
  double log_sum = 0.0;
  for (const auto& s : sols) {
    row.bwe_max = std::max(row.bwe_max, s.bwe);
    // Exact zeros would send the geometric mean to 0; clamp at machine precision.
    log_sum += std::log(std::max(s.bwe, 1e-300));
  }
  row.bwe_geomean = sols.empty() ? 0.0 : std::exp(log_sum / static_cast<double>(sols.size()));
  row.bwe_geomean = std::min(row.bwe_geomean, row.bwe_max);
}

double norm_of(const std::vector<Complex>& z) {
  double s = 0.0;
  for (const auto& v : z) s += std::norm(v);
  return std::sqrt(s);
}

struct PlantedSpec {
  int n, s, d;
};

}  // namespace

std::string bench_csv_header() {
  return "n,s,d,delta_expected,gamma,d_size,bwe_max,bwe_geomean,t_offline_s,t_online_s,recovered_count";
}

std::string stress_csv_header() { return "e,n,s,d,delta_expected,recovered_count,bwe_max,max_norm"; }

std::string to_csv(const BenchRow& r) {
  std::ostringstream os;
  os << r.n << ',' << r.s << ',' << r.d << ',' << r.delta_expected << ',' << r.gamma << ',' << r.d_size << ','
     << fmt(r.bwe_max) << ',' << fmt(r.bwe_geomean) << ',' << fmt(r.t_offline_s) << ',' << fmt(r.t_online_s)
     << ',' << r.recovered_count;
  return os.str();
}

std::string to_csv(const StressRow& r) {
  std::ostringstream os;
  os << r.e << ',' << r.n << ',' << r.s << ',' << r.d << ',' << r.delta_expected << ',' << r.recovered_count
     << ',' << fmt(r.bwe_max) << ',' << fmt(r.max_norm);
  return os.str();
}

int count_recovered(const std::vector<std::vector<Complex>>& planted, const std::vector<Solution>& sols,
                    double rel_tol) {
  int count = 0;
  for (const auto& root : planted) {
    const double scale = std::max(1.0, norm_of(root));
    for (const auto& s : sols) {
      double d = 0.0;
      for (std::size_t i = 0; i < root.size(); ++i) d += std::norm(root[i] - s.z[i]);
      if (std::sqrt(d) <= rel_tol * scale) {
        ++count;
        break;
      }
    }
  }
  return count;
}

PlantedRun run_planted(const LatticePolytope& P, int d, int s, std::uint64_t seed, double outlier_scale,
                       const SolveOptions& opts) {
  PlantedRun run;
  Rng rng(seed);
  const Support A = dilate_lattice_points(P, d);
  const int delta = static_cast<int>(A.size()) - s;
  run.sys = gen_vandermonde_system(A, delta, rng, outlier_scale);

  const std::vector<int> degrees(run.sys.F.size(), d);
  IncrementalOptions iopts;
  iopts.cokernel.rtol = opts.rtol;
  iopts.cokernel.compression_factor = opts.compression_factor;
  auto t0 = Clock::now();
  run.offline = incremental_unmixed(run.sys.F, P, degrees, rng, iopts);
  const double t_off = seconds_since(t0);

  SolveOptions online = opts;
  online.precomputed = Precomputed{run.offline.cokernel, run.offline.f0};
  t0 = Clock::now();
  run.report = solve(run.sys.F, run.offline.tuple, online);
  const double t_on = seconds_since(t0);

  BenchRow& row = run.row;
  row.n = P.dim();
  row.s = static_cast<int>(run.sys.F.size());
  row.d = std::to_string(d);
  row.delta_expected = delta;
  row.gamma = run.report.gamma;
  row.d_size = run.report.d_size;
  fill_bwe(row, run.report.solutions);
  row.t_offline_s = t_off;
  row.t_online_s = t_on;
  row.recovered_count = count_recovered(run.sys.roots, run.report.solutions);
  return run;
}

BenchRow run_square_dense(int n, const std::vector<int>& degrees, std::uint64_t seed, const SolveOptions& opts) {
  Rng rng(seed);
  PolySystem F = gen_dense(n, degrees, rng);
  const AdmissibleTuple t = tuple_dense(n, degrees);
  SolveOptions o = opts;
  o.seed = seed;
  const SolveReport rep = solve(F, t, o);

  BenchRow row;
  row.n = n;
  row.s = static_cast<int>(degrees.size());
  row.d = join_degrees(degrees);
  row.delta_expected = 1;
  for (int d : degrees) row.delta_expected *= d;
  row.gamma = rep.gamma;
  row.d_size = rep.d_size;
  fill_bwe(row, rep.solutions);
  row.t_offline_s = rep.timings.at("cokernel");
  row.t_online_s = rep.timings.at("total") - row.t_offline_s;
  row.recovered_count = static_cast<int>(rep.solutions.size());
  return row;
}

std::vector<StressRow> run_infinity_stress(int e_max, std::uint64_t seed, const SolveOptions& opts) {
  const LatticePolytope P = LatticePolytope::simplex(3);
  std::vector<StressRow> rows;
  for (int e = 0; e <= e_max; ++e) {
    // Same base seed for every e so only the outlier moves.
    const PlantedRun run = run_planted(P, 3, 6, seed, std::pow(10.0, e), opts);
    StressRow r;
    r.e = e;
    r.n = 3;
    r.s = run.row.s;
    r.d = run.row.d;
    r.delta_expected = run.row.delta_expected;
    r.recovered_count = run.row.recovered_count;
    r.bwe_max = run.row.bwe_max;
    for (const auto& s : run.report.solutions) r.max_norm = std::max(r.max_norm, norm_of(s.z));
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::string> bench_registry() {
  return {"table3_small", "table4_small", "square_dense", "infinity_stress"};
}

void run_scenario(const std::string& name, const BenchOptions& opts, std::ostream& out) {
  SolveOptions so;
  so.seed = opts.seed;

  if (name == "infinity_stress") {
    out << stress_csv_header() << '\n';
    for (const auto& r : run_infinity_stress(8, opts.seed, so)) out << to_csv(r) << '\n' << std::flush;
    return;
  }

  if (name == "table3_small") {
    std::vector<PlantedSpec> specs = {{3, 6, 2}, {3, 6, 3}, {3, 6, 4}, {3, 6, 6}, {2, 4, 3}, {4, 8, 3}};
    if (opts.full) {
      for (PlantedSpec p : {PlantedSpec{3, 6, 8}, {3, 6, 10}, {5, 10, 3}, {6, 12, 3}, {6, 18, 2}, {6, 18, 3},
                            {6, 18, 4}, {6, 18, 5}, {6, 18, 6}, {15, 616, 3}})
        specs.push_back(p);
    }
    out << bench_csv_header() << '\n';
    for (const auto& p : specs)
      out << to_csv(run_planted(LatticePolytope::simplex(p.n), p.d, p.s, opts.seed, 1.0, so).row) << '\n'
          << std::flush;
    return;
  }

  if (name == "table4_small") {
    const LatticePolytope P(unmixed_a0_3d());
    std::vector<int> ds = {1, 2, 3};
    if (opts.full) ds.insert(ds.end(), {4, 5, 6});
    out << bench_csv_header() << '\n';
    for (int d : ds) out << to_csv(run_planted(P, d, 6, opts.seed, 1.0, so).row) << '\n' << std::flush;
    return;
  }

  if (name == "square_dense") {
    std::vector<std::pair<int, std::vector<int>>> cases = {{2, {10, 10}}, {3, {3, 3, 3}}};
    if (opts.full) {
      cases.push_back({2, {20, 20}});
      cases.push_back({3, {4, 8, 12}});
    }
    out << bench_csv_header() << '\n';
    for (const auto& [n, d] : cases) out << to_csv(run_square_dense(n, d, opts.seed, so)) << '\n' << std::flush;
    return;
  }

  throw UnknownScenario("unknown scenario: " + name);
}

}  // namespace eigensolver
