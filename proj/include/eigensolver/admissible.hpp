#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigensolver/lattice.hpp"
#include "eigensolver/macaulay.hpp"

namespace eigensolver {

enum class Family { dense, unmixed, multi_dense, multi_unmixed, mixed, incremental, custom };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct AdmissibleTuple {
  Support A0;
  std::vector<Support> E;  // E[0] = E0, E[i] = E_i
  Support D;
  Family family = Family::custom;

  int num_equations() const { return static_cast<int>(E.size()) - 1; }
};

// Throws CompatibilityError if A_i + E_i is not inside D, where A_i ranges over
// A0 and the supplied supports of f_1..f_s.
void check_compatibility(const AdmissibleTuple& t, const std::vector<Support>& supports);
ExponentRecoveryTable check_lattice(const AdmissibleTuple& t);

using DegreeMatrix = std::vector<std::vector<int>>;  // d_{i,k}, one row per equation

// Family supports A_i (the full lattice point sets each f_i may use).
std::vector<Support> dense_supports(int n, const std::vector<int>& degrees);
std::vector<Support> unmixed_supports(const LatticePolytope& P, const std::vector<int>& degrees);
std::vector<Support> multi_dense_supports(const std::vector<int>& partition, const DegreeMatrix& d);
std::vector<Support> multi_unmixed_supports(const std::vector<LatticePolytope>& P, const DegreeMatrix& d);

AdmissibleTuple tuple_dense(int n, const std::vector<int>& degrees);
AdmissibleTuple tuple_unmixed(const LatticePolytope& P, const std::vector<int>& degrees);
AdmissibleTuple tuple_multi_dense(const std::vector<int>& partition, const DegreeMatrix& d);
AdmissibleTuple tuple_multi_unmixed(const std::vector<LatticePolytope>& P, const DegreeMatrix& d);
AdmissibleTuple tuple_mixed(const std::vector<Support>& supports);

struct IncrementalResult {
  AdmissibleTuple tuple;
  CokernelBasis cokernel;
  CMatrix n_f0;
  Polynomial f0;
  int lambda = 0;
  std::vector<int> gamma_history;  // gamma at each visited lambda
};

struct IncrementalOptions {
  CokernelOptions cokernel;
  std::optional<int> lambda_cap;
};

// Raises the degree lambda until the rank condition holds for a fixed random f0.
IncrementalResult incremental_unmixed(const PolySystem& F, const LatticePolytope& P,
                                      const std::vector<int>& degrees, Rng& rng,
                                      const IncrementalOptions& opts = {});

struct HilbertPrediction {
  int lambda_min = 0;
  std::vector<long long> coeffs;
  bool semiregular_assumed = true;
};

// degrees lists d_0..d_s.
HilbertPrediction lambda_min_semiregular(const LatticePolytope& P, const std::vector<int>& degrees);

struct CommutativityReport {
  bool holds = false;
  int gamma = 0;
  int difference = 0;  // rank contributed by f0^2 * x^E0 modulo the enlarged image
};

CommutativityReport commutativity_check(const PolySystem& F, const AdmissibleTuple& t,
                                        const Polynomial& f0, double rtol);

}  // namespace eigensolver
