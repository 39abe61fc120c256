#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eigensolver/admissible.hpp"

namespace eigensolver {

struct MgFamily {
  // Representatives Q0^* M_{x^alpha} Q0, one per alpha in A0 (A0's order).
  std::vector<CMatrix> Mx;
  Support A0;
  std::vector<Exponent> basis;  // B, gamma exponents of E0
  CMatrix Q0, Rhat0;
  Polynomial f0;

  int gamma() const { return static_cast<int>(basis.size()); }
  // M_g for g = sum_alpha coeffs[alpha] x^alpha, coeffs in A0's order.
  CMatrix combine(const std::vector<Complex>& coeffs) const;
  CMatrix of(const Polynomial& g) const;
};

MgFamily build_mg_family(const CokernelBasis& C, const AdmissibleTuple& tuple, const Polynomial& f0,
                         double rtol);

// N_{g,B} N_{f0,B}^{-1} for an explicit basis B, in the untransformed frame.
CMatrix multiplication_matrix(const CokernelBasis& C, const Polynomial& g, const Polynomial& f0,
                              const std::vector<Exponent>& B);

struct EigenspaceResult {
  CMatrix basis;  // empty (0 rows) when no common eigenvector exists
  std::string diagnostic;
};

EigenspaceResult get_eigenspace(Complex mu, const CMatrix& V, const CMatrix& Mh, double rtol, Rng& rng);

class RootExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Eigenvalues of each M_{x^alpha} on span(V), then ratios to the alpha = 0 one.
std::vector<Complex> extract_root(const CMatrix& V, const MgFamily& fam,
                                  const ExponentRecoveryTable& table, Rng& rng);

struct Precomputed {
  CokernelBasis cokernel;
  Polynomial f0;
};

struct SolveOptions {
  double rtol = 1e-8;
  double cluster_tol = 1e-6;
  double eigenspace_tol = 1e-6;
  double bwe_threshold = 1e-6;
  double merge_tol = 1e-6;
  double compression_factor = 1.5;
  int max_f0_redraws = 3;
  std::uint64_t seed = 0;
  std::optional<Precomputed> precomputed;
};

struct Solution {
  std::vector<Complex> z;
  double bwe = 0.0;
  Complex eigenvalue;  // cluster eigenvalue of M_g
};

struct SolveReport {
  std::vector<Solution> solutions;
  int gamma = 0;
  int d_size = 0;
  int candidates_total = 0;
  int f0_draws = 0;
  int clusters = 0;
  std::map<std::string, double> timings;
  std::uint64_t seed = 0;
  SolveOptions tolerances;
  std::vector<std::string> diagnostics;
  // g = sum g_coeffs[alpha] x^alpha in A0's order; f0 the final draw.
  std::vector<Complex> g_coeffs;
  Polynomial f0;
  Support A0;
};

SolveReport solve(const PolySystem& F, const AdmissibleTuple& tuple, const SolveOptions& opts = {});

}  // namespace eigensolver
