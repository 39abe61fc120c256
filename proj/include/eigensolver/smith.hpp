#pragma once

#include <vector>

namespace eigensolver {

using IntMatrix = std::vector<std::vector<long long>>;

// U * A * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ...
struct SmithForm {
  IntMatrix U, S, V;
  std::vector<long long> invariants;  // nonzero diagonal of S
};

SmithForm smith_normal_form(const IntMatrix& A);

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_identity(std::size_t n);

}  // namespace eigensolver
