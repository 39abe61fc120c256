#include "eigensolver/generators.hpp"

namespace eigensolver {

namespace {

PolySystem random_on(const std::vector<Support>& supports, Rng& rng) {
  PolySystem F;
  for (const auto& s : supports) F.push_back(Polynomial::random(s, rng, false));
  return F;
}

Polynomial poly2(std::initializer_list<std::pair<Exponent, double>> terms) {
  std::map<Exponent, Complex> m;
  for (const auto& [e, c] : terms) m[e] += c;
  return Polynomial(static_cast<int>(terms.begin()->first.size()), m);
}

}  // namespace

PolySystem gen_dense(int n, const std::vector<int>& degrees, Rng& rng) {
  return random_on(dense_supports(n, degrees), rng);
}

PolySystem gen_unmixed(const LatticePolytope& P, const std::vector<int>& degrees, Rng& rng) {
  return random_on(unmixed_supports(P, degrees), rng);
}

PolySystem gen_multi_dense(const std::vector<int>& partition, const DegreeMatrix& d, Rng& rng) {
  return random_on(multi_dense_supports(partition, d), rng);
}

PolySystem gen_multi_unmixed(const std::vector<LatticePolytope>& P, const DegreeMatrix& d, Rng& rng) {
  return random_on(multi_unmixed_supports(P, d), rng);
}

PolySystem gen_mixed(const std::vector<Support>& supports, Rng& rng) { return random_on(supports, rng); }

PlantedSystem gen_vandermonde_system(const Support& A, int delta, Rng& rng, double outlier_scale) {
  const int n = A.dim();
  const int k = static_cast<int>(A.size());
  if (delta < 1 || delta >= k - n) throw std::invalid_argument("not overdetermined");
  PlantedSystem out;
  CMatrix V(delta, k);
  for (int i = 0; i < delta; ++i) {
    std::vector<Complex> z(n);
    for (auto& v : z) v = complex_normal(rng);
    if (i == 0)
      for (auto& v : z) v *= outlier_scale;
    auto row = monomial_vector(z, A);
    for (int j = 0; j < k; ++j) V(i, j) = row[j];
    V.row(i) /= V.row(i).norm();
    out.roots.push_back(std::move(z));
  }
  // Right nullspace of V, read off as the left nullspace of V^H.
  auto ns = linalg::svd_left_nullspace(V.adjoint(), 1e-12);
  for (Eigen::Index r = 0; r < ns.basis.rows(); ++r) {
    std::map<Exponent, Complex> terms;
    for (int j = 0; j < k; ++j) terms[A[j]] = std::conj(ns.basis(r, j));
    out.F.emplace_back(n, terms);
  }
  return out;
}

std::map<std::string, BuiltinExample> builtin_examples() {
  std::map<std::string, BuiltinExample> ex;

  BuiltinExample run;
  run.F = {poly2({{{0, 0}, -1}, {{1, 0}, 2}, {{0, 1}, 2}, {{0, 2}, 1}}),
           poly2({{{0, 0}, -1}, {{1, 0}, 1}, {{2, 0}, 1}, {{0, 1}, 1}}),
           poly2({{{0, 0}, -1}, {{1, 0}, 2}, {{2, 0}, 2}, {{0, 1}, 1}})};
  AdmissibleTuple t;
  t.family = Family::custom;
  t.A0 = Support(2, {{0, 0}, {1, 0}, {0, 1}});
  t.E = {t.A0, Support(2, {{0, 0}, {1, 0}}), Support(2, {{0, 0}, {0, 1}}), Support(2, {{0, 0}, {0, 1}})};
  t.D = Support(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}});
  run.tuple = t;
  run.known_roots = {{-1.0, 1.0}};
  run.expected_roots = 1;
  run.extras["f0"] = poly2({{{0, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 1}});
  run.extras["g"] = poly2({{{0, 0}, -1}, {{1, 0}, 3}, {{0, 1}, 2}});
  run.extras["h"] = poly2({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  ex["running"] = std::move(run);

  // Three cyclically permuted equations with coefficients (-13, -1, -1, 24, -1).
  BuiltinExample mol;
  const double b[5] = {-13, -1, -1, 24, -1};
  for (int i = 0; i < 3; ++i) {
    const int p = (i + 1) % 3, q = (i + 2) % 3;
    auto mono = [&](int ep, int eq) {
      Exponent e(3, 0);
      e[p] = ep;
      e[q] = eq;
      return e;
    };
    std::map<Exponent, Complex> terms{{mono(0, 0), b[0]}, {mono(2, 0), b[1]}, {mono(0, 2), b[2]},
                                      {mono(1, 1), b[3]}, {mono(2, 2), b[4]}};
    mol.F.emplace_back(3, terms);
  }
  mol.expected_roots = 16;
  ex["molecular"] = std::move(mol);
  return ex;
}

Support unmixed_a0_3d() {
  return Support(3, {{2, 1, 0}, {2, 1, 2}, {0, 0, 1}, {1, 0, 0}, {1, 1, 2}, {0, 0, 1}, {0, 1, 2}, {0, 0, 0}});
}

LatticePolytope unmixed_square_polytope() {
  return LatticePolytope(Support(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 2}}));
}

}  // namespace eigensolver
