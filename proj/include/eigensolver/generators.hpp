#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eigensolver/admissible.hpp"

namespace eigensolver {

// Real standard-normal coefficients on the full family supports.
PolySystem gen_dense(int n, const std::vector<int>& degrees, Rng& rng);
PolySystem gen_unmixed(const LatticePolytope& P, const std::vector<int>& degrees, Rng& rng);
PolySystem gen_multi_dense(const std::vector<int>& partition, const DegreeMatrix& d, Rng& rng);
PolySystem gen_multi_unmixed(const std::vector<LatticePolytope>& P, const DegreeMatrix& d, Rng& rng);
PolySystem gen_mixed(const std::vector<Support>& supports, Rng& rng);

struct PlantedSystem {
  PolySystem F;
  std::vector<std::vector<Complex>> roots;
};

// Overdetermined system on support A vanishing at delta random points. The
// first root is multiplied by outlier_scale (pushes it towards infinity).
PlantedSystem gen_vandermonde_system(const Support& A, int delta, Rng& rng, double outlier_scale = 1.0);

struct BuiltinExample {
  PolySystem F;
  std::optional<AdmissibleTuple> tuple;
  std::vector<std::vector<Complex>> known_roots;
  int expected_roots = 0;
  std::map<std::string, Polynomial> extras;  // named auxiliary polynomials (f0, g, h)
};

// "running" (two variables, three equations) and "molecular" (three variables).
std::map<std::string, BuiltinExample> builtin_examples();

// A0 generating set for the unmixed overdetermined experiments in three variables.
Support unmixed_a0_3d();
// Polytope of the two-variable unmixed square system.
LatticePolytope unmixed_square_polytope();

}  // namespace eigensolver
