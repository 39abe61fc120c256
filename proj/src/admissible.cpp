#include "eigensolver/admissible.hpp"

#include <algorithm>
#include <numeric>

namespace eigensolver {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void require_nonnegative(int factor) {
  if (factor < 0) throw std::invalid_argument("system too small for the tuple bound");
}

void check_degrees(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("need at least one equation");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");
}

Support simplex_points(int n, int k) {
  require_nonnegative(k);
  return dilate_lattice_points(LatticePolytope::simplex(n), k);
}

void check_degree_matrix(const DegreeMatrix& d, std::size_t blocks) {
  if (d.empty()) throw std::invalid_argument("need at least one equation");
  for (const auto& row : d) {
    if (row.size() != blocks) throw std::invalid_argument("degree matrix has wrong number of columns");
    for (int v : row)
      if (v < 0) throw std::invalid_argument("degrees must be nonnegative");
  }
}

// Column sums of the degree matrix including the row d_{0,k} = 1.
std::vector<int> block_totals(const DegreeMatrix& d, std::size_t blocks) {
  std::vector<int> tot(blocks, 1);
  for (const auto& row : d)
    for (std::size_t k = 0; k < blocks; ++k) tot[k] += row[k];
  return tot;
}

// Vertices when the set is full-dimensional; facet enumeration on the raw points
// of a large support would dominate the Minkowski sums below.
Support hull_generators(const Support& s) {
  return affine_rank(s) == s.dim() ? LatticePolytope(s).vertices() : s;
}

// Lattice points of the Minkowski sum of Conv(S_j) over the given generator sets.
Support polytope_sum_points(const std::vector<const Support*>& parts, int n) {
  Support acc(n, {Exponent(n, 0)});
  for (const Support* s : parts) {
    acc = minkowski_sum(acc, *s);
    if (affine_rank(acc) == n) acc = LatticePolytope(acc).vertices();
  }
  if (affine_rank(acc) != n) throw InvalidSupport("Minkowski sum is not full-dimensional");
  return dilate_lattice_points(LatticePolytope(acc), 1);
}

AdmissibleTuple finish(AdmissibleTuple t, const std::vector<Support>& supports) {
  check_compatibility(t, supports);
  check_lattice(t);
  return t;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::dense: return "dense";
    case Family::unmixed: return "unmixed";
    case Family::multi_dense: return "multi-dense";
    case Family::multi_unmixed: return "multi-unmixed";
    case Family::mixed: return "mixed";
    case Family::incremental: return "incremental";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& s) {
  for (Family f : {Family::dense, Family::unmixed, Family::multi_dense, Family::multi_unmixed,
                   Family::mixed, Family::incremental, Family::custom}) {
    std::string name = family_name(f);
    std::string alt = name;
    std::replace(alt.begin(), alt.end(), '-', '_');
    if (s == name || s == alt) return f;
  }
  throw std::invalid_argument("unknown family '" + s + "'");
}

void check_compatibility(const AdmissibleTuple& t, const std::vector<Support>& supports) {
  if (supports.size() + 1 != t.E.size())
    throw std::invalid_argument("tuple has " + std::to_string(t.E.size() - 1) + " E_i but system has " +
                                std::to_string(supports.size()) + " equations");
  for (std::size_t i = 0; i < t.E.size(); ++i) {
    const Support& A = i == 0 ? t.A0 : supports[i - 1];
    for (const auto& beta : t.E[i])
      for (const auto& alpha : A)
        if (!t.D.contains(alpha + beta)) throw CompatibilityError(static_cast<int>(i), beta, alpha);
  }
}

ExponentRecoveryTable check_lattice(const AdmissibleTuple& t) { return lattice_condition(t.A0); }

std::vector<Support> dense_supports(int n, const std::vector<int>& degrees) {
  std::vector<Support> out;
  for (int d : degrees) out.push_back(simplex_points(n, d));
  return out;
}

std::vector<Support> unmixed_supports(const LatticePolytope& P, const std::vector<int>& degrees) {
  std::vector<Support> out;
  for (int d : degrees) out.push_back(dilate_lattice_points(P, d));
  return out;
}

std::vector<Support> multi_dense_supports(const std::vector<int>& partition, const DegreeMatrix& d) {
  check_degree_matrix(d, partition.size());
  std::vector<Support> out;
  for (const auto& row : d) {
    std::vector<Support> blocks;
    for (std::size_t k = 0; k < partition.size(); ++k) blocks.push_back(simplex_points(partition[k], row[k]));
    out.push_back(cartesian_product(blocks));
  }
  return out;
}

std::vector<Support> multi_unmixed_supports(const std::vector<LatticePolytope>& P, const DegreeMatrix& d) {
  check_degree_matrix(d, P.size());
  std::vector<Support> out;
  for (const auto& row : d) {
    std::vector<Support> blocks;
    for (std::size_t k = 0; k < P.size(); ++k) blocks.push_back(dilate_lattice_points(P[k], row[k]));
    out.push_back(cartesian_product(blocks));
  }
  return out;
}

AdmissibleTuple tuple_dense(int n, const std::vector<int>& degrees) {
  check_degrees(degrees);
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const int total = 1 + sum_of(degrees);  // d_0 = 1
  AdmissibleTuple t;
  t.family = Family::dense;
  t.A0 = simplex_points(n, 1);
  t.E.push_back(simplex_points(n, total - 1 - n));
  for (int d : degrees) t.E.push_back(simplex_points(n, total - d - n));
  t.D = simplex_points(n, total - n);
  return finish(std::move(t), dense_supports(n, degrees));
}

AdmissibleTuple tuple_unmixed(const LatticePolytope& P, const std::vector<int>& degrees) {
  check_degrees(degrees);
  if (!P.contains(Exponent(P.dim(), 0))) throw InvalidSupport("polytope must contain the origin");
  const int c = codegree(P);
  const int total = 1 + sum_of(degrees);
  auto dil = [&](int k) {
    require_nonnegative(k);
    return dilate_lattice_points(P, k);
  };
  AdmissibleTuple t;
  t.family = Family::unmixed;
  t.A0 = dil(1);
  t.E.push_back(dil(total - 1 - c + 1));
  for (int d : degrees) t.E.push_back(dil(total - d - c + 1));
  t.D = dil(total - c + 1);
  return finish(std::move(t), unmixed_supports(P, degrees));
}

AdmissibleTuple tuple_multi_dense(const std::vector<int>& partition, const DegreeMatrix& d) {
  check_degree_matrix(d, partition.size());
  for (int nk : partition)
    if (nk < 1) throw std::invalid_argument("block sizes must be positive");
  const auto tot = block_totals(d, partition.size());
  auto product = [&](const std::vector<int>& drop) {
    std::vector<Support> blocks;
    for (std::size_t k = 0; k < partition.size(); ++k)
      blocks.push_back(simplex_points(partition[k], tot[k] - drop[k] - partition[k]));
    return cartesian_product(blocks);
  };
  AdmissibleTuple t;
  t.family = Family::multi_dense;
  std::vector<Support> a0;
  for (int nk : partition) a0.push_back(simplex_points(nk, 1));
  t.A0 = cartesian_product(a0);
  t.E.push_back(product(std::vector<int>(partition.size(), 1)));
  for (const auto& row : d) t.E.push_back(product(row));
  t.D = product(std::vector<int>(partition.size(), 0));
  return finish(std::move(t), multi_dense_supports(partition, d));
}

AdmissibleTuple tuple_multi_unmixed(const std::vector<LatticePolytope>& P, const DegreeMatrix& d) {
  check_degree_matrix(d, P.size());
  std::vector<int> cod;
  for (const auto& p : P) {
    if (!p.contains(Exponent(p.dim(), 0))) throw InvalidSupport("polytope must contain the origin");
    cod.push_back(codegree(p));
  }
  const auto tot = block_totals(d, P.size());
  auto product = [&](const std::vector<int>& drop) {
    std::vector<Support> blocks;
    for (std::size_t k = 0; k < P.size(); ++k) {
      int f = tot[k] - drop[k] - cod[k] + 1;
      require_nonnegative(f);
      blocks.push_back(dilate_lattice_points(P[k], f));
    }
    return cartesian_product(blocks);
  };
  AdmissibleTuple t;
  t.family = Family::multi_unmixed;
  std::vector<Support> a0;
  for (const auto& p : P) a0.push_back(dilate_lattice_points(p, 1));
  t.A0 = cartesian_product(a0);
  t.E.push_back(product(std::vector<int>(P.size(), 1)));
  for (const auto& row : d) t.E.push_back(product(row));
  t.D = product(std::vector<int>(P.size(), 0));
  return finish(std::move(t), multi_unmixed_supports(P, d));
}

AdmissibleTuple tuple_mixed(const std::vector<Support>& supports) {
  if (supports.empty()) throw std::invalid_argument("need at least one equation");
  const int n = supports.front().dim();
  for (const auto& s : supports)
    if (s.dim() != n || s.empty()) throw InvalidSupport("supports must be nonempty and share a dimension");
  const Support simplex = LatticePolytope::simplex(n).generators();
  std::vector<Support> hulls;
  for (const auto& s : supports) hulls.push_back(hull_generators(s));
  std::vector<const Support*> all{&simplex};
  for (const auto& s : hulls) all.push_back(&s);

  AdmissibleTuple t;
  t.family = Family::mixed;
  t.A0 = simplex_points(n, 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<const Support*> rest;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) rest.push_back(all[j]);
    t.E.push_back(polytope_sum_points(rest, n));
  }
  t.D = polytope_sum_points(all, n);
  return finish(std::move(t), supports);
}

IncrementalResult incremental_unmixed(const PolySystem& F, const LatticePolytope& P,
                                      const std::vector<int>& degrees, Rng& rng,
                                      const IncrementalOptions& opts) {
  check_degrees(degrees);
  if (degrees.size() != F.size()) throw std::invalid_argument("need one degree per polynomial");
  if (system_dim(F) != P.dim()) throw std::invalid_argument("system and polytope dimensions differ");
  const int n = P.dim();
  const int total = 1 + sum_of(degrees);
  const int cap = opts.lambda_cap.value_or(total - codegree(P) + 1);

  auto tuple_at = [&](int lambda) {
    AdmissibleTuple t;
    t.family = Family::incremental;
    t.A0 = dilate_lattice_points(P, 1);
    t.E.push_back(dilate_lattice_points(P, lambda - 1));
    for (int d : degrees) t.E.push_back(lambda >= d ? dilate_lattice_points(P, lambda - d) : Support(n));
    t.D = dilate_lattice_points(P, lambda);
    return t;
  };

  IncrementalResult res;
  res.lambda = *std::max_element(degrees.begin(), degrees.end());
  res.tuple = tuple_at(res.lambda);
  check_compatibility(res.tuple, supports_of(F));
  check_lattice(res.tuple);
  res.f0 = Polynomial::random(res.tuple.A0, rng, true);

  std::vector<Support> Es(res.tuple.E.begin() + 1, res.tuple.E.end());
  res.cokernel = cokernel(F, Es, res.tuple.D, rng, opts.cokernel);
  while (true) {
    const int gamma = res.cokernel.gamma();
    res.gamma_history.push_back(gamma);
    res.n_f0 = n_matrix(res.cokernel, res.f0, res.tuple.E[0]);
    if (gamma == 0 || linalg::numerical_rank(res.n_f0, opts.cokernel.rtol) == gamma) return res;
    if (res.lambda >= cap) throw RankConditionError("rank condition never met");
    AdmissibleTuple next = tuple_at(res.lambda + 1);
    std::vector<Support> E_new;
    for (std::size_t i = 1; i < next.E.size(); ++i) E_new.push_back(next.E[i].set_difference(res.tuple.E[i]));
    res.cokernel = extend_cokernel(res.cokernel, F, E_new, next.D, rng, opts.cokernel);
    res.tuple = std::move(next);
    ++res.lambda;
  }
}

HilbertPrediction lambda_min_semiregular(const LatticePolytope& P, const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("need d_0..d_s");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");
  const int bound = sum_of(degrees) - codegree(P) + 1;
  HilbertPrediction h;
  h.coeffs = ehrhart_coeffs(P, std::max(bound, 0));
  for (int d : degrees)
    for (int k = static_cast<int>(h.coeffs.size()) - 1; k >= d; --k) h.coeffs[k] -= h.coeffs[k - d];
  for (int k = 0; k < static_cast<int>(h.coeffs.size()); ++k)
    if (h.coeffs[k] <= 0) {
      h.lambda_min = k;
      return h;
    }
  h.lambda_min = bound;
  h.semiregular_assumed = false;
  return h;
}

CommutativityReport commutativity_check(const PolySystem& F, const AdmissibleTuple& t,
                                        const Polynomial& f0, double rtol) {
  CommutativityReport rep;
  std::vector<Support> Es(t.E.begin() + 1, t.E.end());
  rep.gamma = corank(build_macaulay(F, Es, t.D), rtol);
  if (rep.gamma == 0) {
    rep.holds = true;
    return rep;
  }
  const Support Dbig = minkowski_sum(t.D, t.A0);
  std::vector<Support> Ebig;
  for (const auto& e : Es) Ebig.push_back(minkowski_sum(e, t.A0));
  const int hf_plain = corank(build_macaulay(F, Ebig, Dbig), rtol);

  PolySystem G{f0 * f0};
  G.insert(G.end(), F.begin(), F.end());
  std::vector<Support> Eg{t.E[0]};
  Eg.insert(Eg.end(), Ebig.begin(), Ebig.end());
  const int hf_with = corank(build_macaulay(G, Eg, Dbig), rtol);

  rep.difference = hf_plain - hf_with;
  rep.holds = rep.difference == rep.gamma;
  return rep;
}

}  // namespace eigensolver
