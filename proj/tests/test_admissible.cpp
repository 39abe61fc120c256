#include <doctest.h>

#include "eigensolver/generators.hpp"

using namespace eigensolver;

TEST_CASE("dense tuple sizes") {
  CHECK(tuple_dense(2, {20, 20}).D.size() == 820);
  CHECK(tuple_dense(3, {4, 8, 12}).D.size() == 2300);
  const AdmissibleTuple t = tuple_dense(1, {2, 2});
  CHECK(t.D == dilate_lattice_points(LatticePolytope::simplex(1), 4));
  CHECK_NOTHROW(check_compatibility(t, dense_supports(1, {2, 2})));
  CHECK(t.family == Family::dense);
}

TEST_CASE("unmixed tuple") {
  const LatticePolytope P = unmixed_square_polytope();
  CHECK(tuple_unmixed(P, {5, 12}).D.size() == 685);

  const AdmissibleTuple a = tuple_unmixed(LatticePolytope::simplex(2), {2, 3});
  const AdmissibleTuple b = tuple_dense(2, {2, 3});
  CHECK(a.D == b.D);
  CHECK(a.A0 == b.A0);
  for (std::size_t i = 0; i < a.E.size(); ++i) CHECK(a.E[i] == b.E[i]);

  const LatticePolytope sq(Support(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const AdmissibleTuple s = tuple_unmixed(sq, {1, 1});
  CHECK_NOTHROW(check_compatibility(s, unmixed_supports(sq, {1, 1})));

  CHECK_THROWS_AS(tuple_unmixed(LatticePolytope(Support(2, {{1, 0}, {0, 1}, {1, 1}})), {1, 1}), InvalidSupport);
}

TEST_CASE("multigraded tuples") {
  CHECK(tuple_multi_dense({2, 2}, {{1, 6}, {2, 1}, {3, 2}, {4, 1}}).D.size() == 3025);

  const std::vector<LatticePolytope> P = {unmixed_square_polytope(),
                                          LatticePolytope(dilate_lattice_points(LatticePolytope::simplex(2), 2))};
  CHECK(tuple_multi_unmixed(P, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}).D.size() == 2745);

  const AdmissibleTuple one = tuple_multi_dense({2}, {{2}, {3}});
  CHECK(one.D == tuple_dense(2, {2, 3}).D);

  const AdmissibleTuple small = tuple_multi_dense({1, 1}, {{1, 1}, {1, 1}});
  CHECK_NOTHROW(check_compatibility(small, multi_dense_supports({1, 1}, {{1, 1}, {1, 1}})));

  const std::vector<LatticePolytope> simplices = {LatticePolytope::simplex(1), LatticePolytope::simplex(2)};
  const DegreeMatrix d = {{1, 2}, {2, 1}, {1, 1}};
  CHECK(tuple_multi_unmixed(simplices, d).D == tuple_multi_dense({1, 2}, d).D);

  const LatticePolytope sq(Support(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const std::vector<LatticePolytope> squares = {sq, sq};
  const DegreeMatrix ones = {{1, 1}, {1, 1}, {1, 1}, {1, 1}};
  CHECK_NOTHROW(check_compatibility(tuple_multi_unmixed(squares, ones), multi_unmixed_supports(squares, ones)));

  CHECK_THROWS(tuple_multi_dense({2, 2}, {{1, 1, 1}}));
}

TEST_CASE("mixed tuple") {
  const auto mol = builtin_examples().at("molecular");
  CHECK(tuple_mixed(supports_of(mol.F)).D.size() == 200);

  const AdmissibleTuple t = tuple_mixed({Support(1, {{0}, {1}})});
  CHECK(t.D == Support(1, {{0}, {1}, {2}}));

  // Simplex supports: the mixed D is one dilation beyond the dense one.
  const std::vector<int> d = {2, 3};
  const AdmissibleTuple m = tuple_mixed(dense_supports(2, d));
  CHECK(m.D == dilate_lattice_points(LatticePolytope::simplex(2), 1 + 2 + 3));
  CHECK(tuple_dense(2, d).D == dilate_lattice_points(LatticePolytope::simplex(2), 1 + 2 + 3 - 2));
}

TEST_CASE("compatibility failure names the offending data") {
  AdmissibleTuple t = *builtin_examples().at("running").tuple;
  t.D = t.D.set_difference(Support(2, {{2, 1}}));
  try {
    check_compatibility(t, supports_of(builtin_examples().at("running").F));
    FAIL("expected a compatibility error");
  } catch (const CompatibilityError& e) {
    CHECK(e.poly_index >= 1);
    CHECK(e.alpha + e.beta == Exponent{2, 1});
  }
}

TEST_CASE("lattice check on tuples") {
  AdmissibleTuple t = *builtin_examples().at("running").tuple;
  CHECK_NOTHROW(check_lattice(t));
  t.A0 = Support(2, {{0, 0}, {2, 0}, {0, 1}});
  CHECK_THROWS_AS(check_lattice(t), LatticeConditionError);
}

TEST_CASE("incremental construction") {
  Rng rng(29);
  const LatticePolytope S3 = LatticePolytope::simplex(3);
  const PlantedSystem ps = gen_vandermonde_system(dilate_lattice_points(S3, 6), 78, rng);
  const IncrementalResult r = incremental_unmixed(ps.F, S3, std::vector<int>(6, 6), rng);
  CHECK(r.lambda == 9);
  CHECK(r.tuple.D.size() == 220);
  CHECK(r.cokernel.gamma() == 100);
  CHECK(r.gamma_history.back() == 100);

  const PolySystem sq = gen_dense(2, {2, 3}, rng);
  const IncrementalResult s = incremental_unmixed(sq, LatticePolytope::simplex(2), {2, 3}, rng);
  CHECK(s.lambda <= 2 + 3 - 2 + 1);
  CHECK(s.cokernel.gamma() == 6);

  IncrementalOptions capped;
  capped.lambda_cap = 3;
  CHECK_THROWS_AS(incremental_unmixed(ps.F, S3, std::vector<int>(6, 6), rng, capped), RankConditionError);
}

TEST_CASE("semi-regular prediction") {
  CHECK(lambda_min_semiregular(LatticePolytope::simplex(3), {1, 6, 6, 6, 6, 6, 6}).lambda_min == 9);
  CHECK(lambda_min_semiregular(LatticePolytope::simplex(2), {1, 2, 2}).lambda_min <= 3);

  // (1 + t)(1 - t^2) = 1 + t - t^2 - t^3
  const HilbertPrediction h = lambda_min_semiregular(LatticePolytope::simplex(1), {1, 2, 2});
  CHECK(h.coeffs[0] == 1);
  CHECK(h.coeffs[1] == 1);
  CHECK(h.coeffs[2] == -1);
  CHECK(h.lambda_min == 2);
}

TEST_CASE("commutativity criterion") {
  const auto ex = builtin_examples().at("running");
  const CommutativityReport r = commutativity_check(ex.F, *ex.tuple, ex.extras.at("f0"), 1e-8);
  CHECK_FALSE(r.holds);
  CHECK(r.gamma == 2);
  CHECK(r.difference == 1);

  Rng rng(31);
  const AdmissibleTuple t = tuple_dense(2, {2, 3});
  const CommutativityReport g =
      commutativity_check(gen_dense(2, {2, 3}, rng), t, Polynomial::random(t.A0, rng, true), 1e-8);
  CHECK(g.holds);
  CHECK(g.gamma == 6);

  // No solutions at all: vacuous.
  const PolySystem inconsistent = {Polynomial::monomial({0}), Polynomial::monomial({1})};
  const AdmissibleTuple ti = tuple_dense(1, {1, 1});
  const CommutativityReport v =
      commutativity_check(inconsistent, ti, Polynomial::random(ti.A0, rng, true), 1e-8);
  CHECK(v.gamma == 0);
  CHECK(v.holds);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::dense, Family::unmixed, Family::multi_dense, Family::multi_unmixed, Family::mixed,
                   Family::incremental, Family::custom})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK(family_from_name("multi_dense") == Family::multi_dense);
  CHECK_THROWS(family_from_name("sparse"));
}
