#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eigensolver/generators.hpp"
#include "eigensolver/solver.hpp"

namespace eigensolver {

struct BenchRow {
  int n = 0;
  int s = 0;
  std::string d;  // degrees joined with ';'
  int delta_expected = 0;
  int gamma = 0;
  int d_size = 0;
  double bwe_max = 0.0;
  double bwe_geomean = 0.0;
  double t_offline_s = 0.0;
  double t_online_s = 0.0;
  int recovered_count = 0;
};

struct StressRow {
  int e = 0;
  int n = 0;
  int s = 0;
  std::string d;
  int delta_expected = 0;
  int recovered_count = 0;
  double bwe_max = 0.0;
  double max_norm = 0.0;
};

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string bench_csv_header();
std::string stress_csv_header();
std::string to_csv(const BenchRow& r);
std::string to_csv(const StressRow& r);

// Planted roots matched by some solution within rel_tol (relative to the root's norm).
int count_recovered(const std::vector<std::vector<Complex>>& planted, const std::vector<Solution>& sols,
                    double rel_tol = 1e-6);

struct PlantedRun {
  BenchRow row;
  PlantedSystem sys;
  IncrementalResult offline;
  SolveReport report;
};

// Overdetermined unmixed instance on (d P) with s equations: Vandermonde system,
// incremental tuple offline, solve with the cached cokernel online.
PlantedRun run_planted(const LatticePolytope& P, int d, int s, std::uint64_t seed, double outlier_scale = 1.0,
                       const SolveOptions& opts = {});

// Random square dense system; offline is the cokernel, online the rest.
BenchRow run_square_dense(int n, const std::vector<int>& degrees, std::uint64_t seed,
                          const SolveOptions& opts = {});

std::vector<StressRow> run_infinity_stress(int e_max, std::uint64_t seed, const SolveOptions& opts = {});

struct BenchOptions {
  bool full = false;
  std::uint64_t seed = 0;
};

std::vector<std::string> bench_registry();
// Writes CSV for one scenario; throws UnknownScenario.
void run_scenario(const std::string& name, const BenchOptions& opts, std::ostream& out);

}  // namespace eigensolver
