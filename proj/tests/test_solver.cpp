#include <doctest.h>

#include "eigensolver/bench.hpp"

using namespace eigensolver;

namespace {

struct Running {
  BuiltinExample ex = builtin_examples().at("running");
  const AdmissibleTuple& t = *ex.tuple;
  Rng rng{3};
  CokernelBasis C = cokernel(ex.F, {t.E.begin() + 1, t.E.end()}, t.D, rng);
  const Polynomial& f0 = ex.extras.at("f0");
};

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Similarity invariants of a 2x2 matrix.
void check_same_spectrum(const CMatrix& A, const CMatrix& B) {
  CHECK(std::abs(A.trace() - B.trace()) <= 1e-10);
  CHECK(std::abs(A.determinant() - B.determinant()) <= 1e-10);
}

}  // namespace

TEST_CASE("multiplication matrices of the running example") {
  Running r;
  const std::vector<Exponent> B = {{0, 0}, {1, 0}};
  const CMatrix Mg = multiplication_matrix(r.C, r.ex.extras.at("g"), r.f0, B);
  // 2I in any frame
  CHECK((Mg - 2.0 * CMatrix::Identity(2, 2)).norm() <= 1e-10);
  check_same_spectrum(multiplication_matrix(r.C, Polynomial::monomial({1, 0}), r.f0, B), mat2(1, 0, 0, 0));
  check_same_spectrum(multiplication_matrix(r.C, r.ex.extras.at("h"), r.f0, B), mat2(-1, 0, 0, 1));

  // B' = {x, y}: a different, non-diagonal M'_g with eigenvalues 2 and 5/4.
  const std::vector<Exponent> B2 = {{1, 0}, {0, 1}};
  check_same_spectrum(multiplication_matrix(r.C, r.ex.extras.at("g"), r.f0, B2), mat2(2, 0, -0.75, 1.25));
  check_same_spectrum(multiplication_matrix(r.C, Polynomial::monomial({1, 0}), r.f0, B2), mat2(1, 0, 0.25, 0.25));
}

TEST_CASE("M_g family") {
  Running r;
  const MgFamily fam = build_mg_family(r.C, r.t, r.f0, 1e-8);
  CHECK(fam.gamma() == 2);
  CHECK((fam.of(r.f0) - CMatrix::Identity(2, 2)).norm() <= 1e-12);
  // M_g depends on the pivoted basis B here; it must agree with the direct construction on that B.
  for (const Polynomial& g : {r.ex.extras.at("g"), Polynomial::monomial({1, 0}), r.ex.extras.at("h")})
    check_same_spectrum(fam.of(g), multiplication_matrix(r.C, g, r.f0, fam.basis));

  Rng rng(4);
  const Polynomial g1 = Polynomial::random(fam.A0, rng, true), g2 = Polynomial::random(fam.A0, rng, true);
  const Complex lam(0.5, -2.0);
  CHECK((fam.of(g1 + g2 * lam) - (fam.of(g1) + lam * fam.of(g2))).norm() <= 1e-12);

  CHECK_THROWS_AS(build_mg_family(r.C, r.t, Polynomial::monomial({0, 0}), 1e-8), RankConditionError);
}

TEST_CASE("joint eigenspaces") {
  Running r;
  Rng rng(6);
  const MgFamily fam = build_mg_family(r.C, r.t, r.f0, 1e-8);
  const CMatrix Mh = fam.of(r.ex.extras.at("h"));
  // Whole space is the mu = 2 eigenspace of M_g; M_h splits it.
  const EigenspaceResult res = get_eigenspace(2.0, CMatrix::Identity(2, 2), Mh, 1e-6, rng);
  CHECK(res.basis.rows() == 0);
  CHECK_FALSE(res.diagnostic.empty());

  // Left eigenvectors of M_h pass through unchanged when m = 1.
  Eigen::ComplexEigenSolver<CMatrix> es(Mh.transpose());
  for (int k = 0; k < 2; ++k) {
    const CMatrix v = es.eigenvectors().col(k).transpose();
    CHECK(get_eigenspace(2.0, v, Mh, 1e-6, rng).basis.rows() == 1);
  }
  const CMatrix mixed = es.eigenvectors().col(0).transpose() + es.eigenvectors().col(1).transpose();
  CHECK(get_eigenspace(2.0, mixed, Mh, 1e-6, rng).basis.rows() == 0);
}

TEST_CASE("root extraction") {
  Running r;
  Rng rng(8);
  const MgFamily fam = build_mg_family(r.C, r.t, r.f0, 1e-8);
  const ExponentRecoveryTable table = check_lattice(r.t);
  // The root's left eigenvector is a common eigenvector of M_x and M_h.
  const CMatrix Mh = fam.of(r.ex.extras.at("h"));
  Eigen::ComplexEigenSolver<CMatrix> es(Mh.transpose());
  bool found = false;
  for (int k = 0; k < 2; ++k) {
    const CMatrix v = es.eigenvectors().col(k).transpose();
    try {
      const auto z = extract_root(v, fam, table, rng);
      if (std::abs(z[0] + 1.0) < 1e-10 && std::abs(z[1] - 1.0) < 1e-10) found = true;
    } catch (const RootExtractionError&) {
    }
  }
  CHECK(found);
}

TEST_CASE("planted roots come back") {
  const PlantedRun run = run_planted(LatticePolytope::simplex(3), 3, 6, 55);
  CHECK(run.row.recovered_count == 14);
  for (const auto& s : run.report.solutions) CHECK(s.bwe <= run.report.tolerances.bwe_threshold);
}

TEST_CASE("end to end on the running example") {
  Running r;
  const SolveReport rep = solve(r.ex.F, r.t);
  REQUIRE(rep.solutions.size() == 1);
  CHECK(std::abs(rep.solutions[0].z[0] + 1.0) < 1e-12);
  CHECK(std::abs(rep.solutions[0].z[1] - 1.0) < 1e-12);
  CHECK(rep.solutions[0].bwe <= 1e-12);
  CHECK(rep.gamma == 2);
  CHECK(rep.d_size == 8);
  CHECK(rep.candidates_total >= 1);
  for (const char* key : {"cokernel", "family", "eigen", "extract", "total"}) CHECK(rep.timings.count(key) == 1);
}

TEST_CASE("molecular system is real") {
  const auto mol = builtin_examples().at("molecular");
  const SolveReport rep = solve(mol.F, tuple_mixed(supports_of(mol.F)));
  CHECK(rep.solutions.size() == 16);
  for (const auto& s : rep.solutions) {
    CHECK(s.bwe <= 1e-10);
    for (const auto& v : s.z) CHECK(std::abs(v.imag()) <= 1e-8);
  }
}

TEST_CASE("solve is deterministic for a seed") {
  Rng rng(70);
  const PolySystem F = gen_dense(2, {3, 4}, rng);
  SolveOptions o;
  o.seed = 99;
  const SolveReport a = solve(F, tuple_dense(2, {3, 4}), o), b = solve(F, tuple_dense(2, {3, 4}), o);
  REQUIRE(a.solutions.size() == 12);
  REQUIRE(b.solutions.size() == a.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) CHECK(a.solutions[i].z == b.solutions[i].z);
}

TEST_CASE("eigenvalue criterion per root") {
  Rng rng(72);
  const PolySystem F = gen_dense(2, {2, 3}, rng);
  const SolveReport rep = solve(F, tuple_dense(2, {2, 3}));
  REQUIRE(rep.solutions.size() == 6);
  std::map<Exponent, Complex> terms;
  for (std::size_t j = 0; j < rep.g_coeffs.size(); ++j) terms[rep.A0[j]] = rep.g_coeffs[j];
  const Polynomial g(2, terms);
  for (const auto& s : rep.solutions) {
    const Complex expect = g(s.z) / rep.f0(s.z);
    CHECK(std::abs(expect - s.eigenvalue) <= 1e-8 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("solutions at infinity do not disturb finite ones") {
  // Dense tuple for the molecular system: gamma counts the Bezout bound.
  const auto mol = builtin_examples().at("molecular");
  const SolveReport rep = solve(mol.F, tuple_dense(3, {4, 4, 4}));
  CHECK(rep.gamma == 64);
  for (const auto& s : rep.solutions) CHECK(s.bwe <= 1e-6);
}

TEST_CASE("precomputed cokernel must match the tuple") {
  Running r;
  SolveOptions o;
  CokernelBasis wrong = r.C;
  wrong.cols = r.t.D.set_difference(Support(2, {{2, 1}}));
  o.precomputed = Precomputed{wrong, r.f0};
  CHECK_THROWS(solve(r.ex.F, r.t, o));
}
