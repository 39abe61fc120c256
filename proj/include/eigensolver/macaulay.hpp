#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eigensolver/linalg.hpp"
#include "eigensolver/poly.hpp"

namespace eigensolver {

class CompatibilityError : public std::invalid_argument {
 public:
  CompatibilityError(int i, Exponent beta, Exponent alpha);
  int poly_index;
  Exponent beta, alpha;
};

class RankConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MacaulayMatrix {
  CMatrix data;
  Support rows;                                // D
  std::vector<std::pair<int, Exponent>> cols;  // (i, beta), beta in E_i
};

MacaulayMatrix build_macaulay(const PolySystem& F, const std::vector<Support>& E, const Support& D);
MacaulayMatrix build_macaulay(const Polynomial& f, const Support& E, const Support& D);

// #D - numerical rank.
int corank(const MacaulayMatrix& M, double rtol);

struct CokernelBasis {
  CMatrix data;  // gamma x #D, orthonormal rows
  Support cols;  // D
  double rank_tol = 1e-8;
  bool compressed = false;
  std::vector<std::string> warnings;

  int gamma() const { return static_cast<int>(data.rows()); }
};

struct CokernelOptions {
  double rtol = 1e-8;
  // Skip compression unless sum #E_i exceeds this multiple of #D.
  double compression_factor = 1.5;
};

CokernelBasis cokernel(const MacaulayMatrix& M, Rng& rng, const CokernelOptions& opts = {});
CokernelBasis cokernel(const PolySystem& F, const std::vector<Support>& E, const Support& D,
                       Rng& rng, const CokernelOptions& opts = {});

// Coker * M(f0, E0; D), assembled sparsely.
CMatrix n_matrix(const CokernelBasis& C, const Polynomial& f0, const Support& E0);
bool rank_condition(const CokernelBasis& C, const Polynomial& f0, const Support& E0, double rtol);

// One degree step of the incremental construction.
CokernelBasis extend_cokernel(const CokernelBasis& C, const PolySystem& F,
                              const std::vector<Support>& E_new, const Support& D_next, Rng& rng,
                              const CokernelOptions& opts = {});

std::string to_matrix_market(const MacaulayMatrix& M);

}  // namespace eigensolver
