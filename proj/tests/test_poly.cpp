#include <doctest.h>

#include "eigensolver/generators.hpp"

using namespace eigensolver;

namespace {

Polynomial from_terms(int dim, std::map<Exponent, Complex> t) { return Polynomial(dim, t); }

}  // namespace

TEST_CASE("support keeps a sorted duplicate-free order") {
  const Support s(2, {{1, 0}, {0, 0}, {1, 0}, {0, 2}});
  CHECK(s.size() == 3);
  CHECK(s[0] == Exponent{0, 0});
  CHECK(s.index_of({0, 2}) == 1);
  CHECK(s.index_of({5, 5}) == -1);
  CHECK(Support(2, {{0, 2}, {1, 0}, {0, 0}}) == s);
  CHECK_THROWS_AS(Support(2, {{0, -1}}), InvalidSupport);
  CHECK_THROWS_AS(Support(2, {{0, 1, 1}}), InvalidSupport);
}

TEST_CASE("set operations") {
  const Support a(1, {{0}, {1}, {2}}), b(1, {{1}, {3}});
  CHECK(a.set_union(b).size() == 4);
  CHECK(a.set_difference(b) == Support(1, {{0}, {2}}));
  CHECK(Support(1, {{1}}).is_subset_of(a));
  CHECK(a.shifted({2}) == Support(1, {{2}, {3}, {4}}));
}

TEST_CASE("zero coefficients are dropped") {
  const Polynomial p = from_terms(2, {{{0, 0}, 1.0}, {{1, 0}, 0.0}});
  CHECK(p.num_terms() == 1);
  const Polynomial q = p - p;
  CHECK(q.is_zero());
}

TEST_CASE("evaluate") {
  const auto ex = builtin_examples().at("running");
  CHECK(std::abs(ex.F[0]({-1.0, 1.0})) == doctest::Approx(0.0));
  CHECK(Polynomial::monomial({0, 0})({3.0, -7.0}) == Complex(1.0));
  const Polynomial f2 = from_terms(2, {{{0, 0}, -1.0}, {{1, 0}, 1.0}, {{2, 0}, 1.0}, {{0, 1}, 1.0}});
  CHECK(f2({2.0, 0.0}) == Complex(5.0));
}

TEST_CASE("monomial_vector") {
  const auto ex = builtin_examples().at("running");
  const auto v = monomial_vector({-1.0, 1.0}, ex.tuple->D);
  const std::vector<Complex> expect = {1, 1, 1, -1, -1, -1, 1, 1};
  CHECK(v == expect);
  CHECK(monomial_vector({0.0, 0.0}, Support(2, {{0, 0}})) == std::vector<Complex>{1.0});
  const auto w = monomial_vector({2.0, 3.0}, Support(2, {{1, 0}, {0, 1}, {1, 1}}));
  // sorted order: (0,1), (1,0), (1,1)
  CHECK(w == std::vector<Complex>{3.0, 2.0, 6.0});
}

TEST_CASE("monomial_vector respects Minkowski sums") {
  Rng rng(5);
  const Support E1(2, {{0, 0}, {1, 0}, {2, 1}}), E2(2, {{0, 1}, {3, 0}});
  const Support S = minkowski_sum(E1, E2);
  const std::vector<Complex> z = {complex_normal(rng), complex_normal(rng)};
  const auto vs = monomial_vector(z, S);
  for (const auto& a : E1)
    for (const auto& b : E2) {
      const Complex prod = monomial_value(a, z) * monomial_value(b, z);
      CHECK(std::abs(vs[S.index_of(a + b)] - prod) <= 1e-12 * std::abs(prod));
    }
}

TEST_CASE("backward error") {
  const auto ex = builtin_examples().at("running");
  CHECK(backward_error(ex.F, {-1.0, 1.0}) <= 1e-15);
  CHECK(backward_error(ex.F, {0.3, 0.2}) > 1e-3);

  Rng rng(9);
  const PlantedSystem ps = gen_vandermonde_system(dilate_lattice_points(LatticePolytope::simplex(3), 2), 4, rng);
  for (const auto& z : ps.roots) CHECK(backward_error(ps.F, z) <= 1e-12);

  // Each term is below one; a single equation evaluates by hand.
  const std::vector<Complex> z = {0.4, -0.9};
  CHECK(backward_error(ex.F, z) < 1.0);
  const Polynomial f(2, {{{0, 0}, 1.0}, {{1, 0}, -2.0}});
  CHECK(backward_error({f}, {3.0, 0.0}) == doctest::Approx(5.0 / 8.0));
}

TEST_CASE("random polynomials are reproducible and keep their support") {
  const Support A(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  Rng r1(42), r2(42);
  const Polynomial p = Polynomial::random(A, r1, true), q = Polynomial::random(A, r2, true);
  CHECK(p.terms() == q.terms());
  CHECK(p.support() == A);
  Rng r3(1);
  const Polynomial c = Polynomial::random(Support(2, {{0, 0}}), r3, false);
  CHECK(c.num_terms() == 1);
  CHECK(c.is_real());
}

TEST_CASE("polynomial products and shifts") {
  const Polynomial a = from_terms(1, {{{0}, 1.0}, {{1}, 1.0}});
  const Polynomial sq = a * a;
  CHECK(sq.coeff({1}) == Complex(2.0));
  CHECK(a.shifted({2}).support() == Support(1, {{2}, {3}}));
  CHECK(sq.total_degree() == 2);
}

TEST_CASE("system dimension must agree") {
  PolySystem F = {Polynomial::monomial({1, 0}), Polynomial::monomial({1})};
  CHECK_THROWS(system_dim(F));
}
