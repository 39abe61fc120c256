#pragma once

#include <cstdint>
#include <vector>

#include "eigensolver/poly.hpp"

namespace eigensolver {

class LatticeConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoordinateUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Facet halfspace a.x <= b (for the undilated polytope).
struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
};

// P = Conv(generators), full-dimensional. The H-description is derived once
// with exact integer arithmetic; membership in lambda*P is then a sign test.
class LatticePolytope {
 public:
  explicit LatticePolytope(Support generators);

  static LatticePolytope simplex(int n);

  const Support& generators() const { return gens_; }
  const Support& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  int dim() const { return gens_.dim(); }

  bool contains(const Exponent& x, int lambda = 1) const;
  bool contains_in_interior(const Exponent& x, int lambda = 1) const;

 private:
  Support gens_;
  Support vertices_;
  std::vector<Facet> facets_;
};

int affine_rank(const Support& pts);

// Conv(P) + Conv(Q) as a polytope, generated by sums of vertices.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// (lambda * P) cap Z^n, lexicographic order. lambda = 0 gives {0}.
Support dilate_lattice_points(const LatticePolytope& P, int lambda);

int codegree(const LatticePolytope& P);

// #(lambda P cap Z^n) for lambda = 0..lambda_max.
std::vector<long long> ehrhart_coeffs(const LatticePolytope& P, int lambda_max);

struct ExponentRecoveryTable {
  // Row j-1 holds the coefficients of alpha_j (j = 2..k) in e_1..e_n.
  std::vector<std::vector<long long>> m;
  // Positions in A0 of alpha_2..alpha_k, and of alpha_1 = 0.
  std::vector<int> nonzero_index;
  int base_index = 0;
  int dim = 0;
};

ExponentRecoveryTable lattice_condition(const Support& A0);

// zeta_l = prod_j ratios_j^{m_{j,l}}, ratios ordered like table.nonzero_index.
std::vector<Complex> recover_point(const std::vector<Complex>& ratios,
                                   const ExponentRecoveryTable& table);

}  // namespace eigensolver
