#include "eigensolver/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "eigensolver/smith.hpp"

namespace eigensolver {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Fraction-free elimination; returns the rank of the given rows.
int int_rank(std::vector<std::vector<i128>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      i128 a = rows[rank][c], b = rows[r][c];
      i128 g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = a * rows[r][k] - b * rows[rank][k];
        g = gcd128(g, rows[r][k]);
      }
      if (g > 1)
        for (auto& v : rows[r]) v /= g;
    }
    ++rank;
  }
  return rank;
}

// Bareiss determinant of a square integer matrix.
i128 int_det(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<i128>> as_rows(const Support& pts) {
  std::vector<std::vector<i128>> rows;
  rows.reserve(pts.size());
  for (const auto& e : pts) rows.emplace_back(e.begin(), e.end());
  return rows;
}

double binomial_estimate(std::size_t k, int n) {
  double c = 1.0;
  for (int i = 0; i < n; ++i) c = c * static_cast<double>(k - i) / (i + 1);
  return c;
}

std::vector<Facet> enumerate_facets(const Support& gens) {
  const int n = gens.dim();
  const std::size_t k = gens.size();
  if (binomial_estimate(k, n) > 5e7)
    throw InvalidSupport("too many generators for exact facet enumeration; pass vertices only");
  auto pts = as_rows(gens);

  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  std::vector<Facet> facets;
  std::vector<std::size_t> comb(n);
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<std::vector<i128>> diff(n - 1, std::vector<i128>(n));
  std::vector<std::vector<i128>> minor(n - 1, std::vector<i128>(n - 1));
  std::vector<i128> normal(n);

  while (true) {
    for (int r = 1; r < n; ++r)
      for (int c = 0; c < n; ++c) diff[r - 1][c] = pts[comb[r]][c] - pts[comb[0]][c];
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n - 1; ++r)
        for (int c = 0, cc = 0; c < n; ++c)
          if (c != j) minor[r][cc++] = diff[r][c];
      normal[j] = ((j % 2) ? -1 : 1) * int_det(minor);
      nonzero = nonzero || normal[j] != 0;
    }
    if (nonzero) {
      i128 g = 0;
      for (auto v : normal) g = gcd128(g, v);
      for (auto& v : normal) v /= g;
      i128 b = 0;
      for (int c = 0; c < n; ++c) b += normal[c] * pts[comb[0]][c];
      bool le = true, ge = true;
      for (const auto& p : pts) {
        i128 s = -b;
        for (int c = 0; c < n; ++c) s += normal[c] * p[c];
        if (s > 0) le = false;
        if (s < 0) ge = false;
        if (!le && !ge) break;
      }
      if (le || ge) {
        int sgn = le ? 1 : -1;
        Facet f;
        f.normal.resize(n);
        for (int c = 0; c < n; ++c) f.normal[c] = static_cast<std::int64_t>(sgn * normal[c]);
        f.offset = static_cast<std::int64_t>(sgn * b);
        if (seen.emplace(f.normal, f.offset).second) facets.push_back(std::move(f));
      }
    }
    // Next n-combination of k.
    int i = n - 1;
    while (i >= 0 && comb[i] == k - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }
  return facets;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const Exponent& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// Visits lattice points of lambda*P in lexicographic order. strict selects the
// interior.
void for_each_lattice_point(const LatticePolytope& P, int lambda, bool strict,
                            const std::function<void(const Exponent&)>& visit) {
  const int n = P.dim();
  std::vector<std::int64_t> lo(n), hi(n);
  for (int c = 0; c < n; ++c) {
    lo[c] = hi[c] = P.vertices()[0][c];
    for (const auto& v : P.vertices()) {
      lo[c] = std::min<std::int64_t>(lo[c], v[c]);
      hi[c] = std::max<std::int64_t>(hi[c], v[c]);
    }
    lo[c] *= lambda;
    hi[c] *= lambda;
  }
  const auto& facets = P.facets();
  const std::size_t nf = facets.size();
  // tail[f][k] = min over the box of sum_{c >= k} a_c x_c.
  std::vector<std::vector<std::int64_t>> tail(nf, std::vector<std::int64_t>(n + 1, 0));
  std::vector<std::int64_t> rhs(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    rhs[f] = facets[f].offset * lambda - (strict ? 1 : 0);
    for (int c = n - 1; c >= 0; --c) {
      std::int64_t a = facets[f].normal[c];
      tail[f][c] = tail[f][c + 1] + std::min(a * lo[c], a * hi[c]);
    }
  }
  Exponent x(n, 0);
  std::vector<std::int64_t> partial(nf, 0);
  std::function<void(int)> rec = [&](int c) {
    if (c == n) {
      visit(x);
      return;
    }
    for (std::int64_t v = lo[c]; v <= hi[c]; ++v) {
      bool ok = true;
      for (std::size_t f = 0; f < nf; ++f)
        if (partial[f] + facets[f].normal[c] * v + tail[f][c + 1] > rhs[f]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      x[c] = static_cast<int>(v);
      for (std::size_t f = 0; f < nf; ++f) partial[f] += facets[f].normal[c] * v;
      rec(c + 1);
      for (std::size_t f = 0; f < nf; ++f) partial[f] -= facets[f].normal[c] * v;
    }
  };
  rec(0);
}

}  // namespace

int affine_rank(const Support& pts) {
  if (pts.size() <= 1) return 0;
  auto rows = as_rows(pts);
  std::vector<std::vector<i128>> d;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<i128> r(rows[i].size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = rows[i][c] - rows[0][c];
    d.push_back(std::move(r));
  }
  return int_rank(std::move(d));
}

LatticePolytope::LatticePolytope(Support generators) : gens_(std::move(generators)) {
  if (gens_.dim() < 1) throw InvalidSupport("polytope needs dimension >= 1");
  if (affine_rank(gens_) != gens_.dim())
    throw InvalidSupport("polytope generators are not full-dimensional");
  facets_ = enumerate_facets(gens_);
  const int n = gens_.dim();
  std::vector<Exponent> verts;
  for (const auto& p : gens_) {
    std::vector<std::vector<i128>> tight;
    for (const auto& f : facets_)
      if (dot(f.normal, p) == f.offset) tight.emplace_back(f.normal.begin(), f.normal.end());
    if (static_cast<int>(tight.size()) >= n && int_rank(std::move(tight)) == n) verts.push_back(p);
  }
  vertices_ = Support(n, std::move(verts));
}

LatticePolytope LatticePolytope::simplex(int n) {
  std::vector<Exponent> g{Exponent(n, 0)};
  for (int l = 0; l < n; ++l) g.push_back(unit_exponent(n, l));
  return LatticePolytope(Support(n, std::move(g)));
}

bool LatticePolytope::contains(const Exponent& x, int lambda) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("point has wrong dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, x) <= f.offset * lambda; });
}

bool LatticePolytope::contains_in_interior(const Exponent& x, int lambda) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("point has wrong dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, x) < f.offset * lambda; });
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  return LatticePolytope(minkowski_sum(p.vertices(), q.vertices()));
}

Support dilate_lattice_points(const LatticePolytope& P, int lambda) {
  if (lambda < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  std::vector<Exponent> pts;
  for_each_lattice_point(P, lambda, false, [&](const Exponent& x) { pts.push_back(x); });
  return Support(P.dim(), std::move(pts));
}

int codegree(const LatticePolytope& P) {
  int cap = P.dim() + 1;
  int ranges = 0;
  for (int c = 0; c < P.dim(); ++c) {
    int lo = P.vertices()[0][c], hi = lo;
    for (const auto& v : P.vertices()) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    ranges += hi - lo;
  }
  cap = std::max(cap, ranges);
  for (int t = 1; t <= cap; ++t) {
    bool found = false;
    for_each_lattice_point(P, t, true, [&](const Exponent&) { found = true; });
    if (found) return t;
  }
  throw InvalidSupport("codegree search exceeded its cap; polytope is not full-dimensional");
}

std::vector<long long> ehrhart_coeffs(const LatticePolytope& P, int lambda_max) {
  if (lambda_max < 0) throw std::invalid_argument("lambda_max must be nonnegative");
  std::vector<long long> out;
  for (int l = 0; l <= lambda_max; ++l) {
    long long count = 0;
    for_each_lattice_point(P, l, false, [&](const Exponent&) { ++count; });
    out.push_back(count);
  }
  return out;
}

ExponentRecoveryTable lattice_condition(const Support& A0) {
  if (A0.empty()) throw std::invalid_argument("A0 is empty");
  const int n = A0.dim();
  ExponentRecoveryTable t;
  t.dim = n;
  long base = A0.index_of(Exponent(n, 0));
  if (base < 0) throw LatticeConditionError("missing origin");
  t.base_index = static_cast<int>(base);
  for (std::size_t j = 0; j < A0.size(); ++j)
    if (static_cast<long>(j) != base) t.nonzero_index.push_back(static_cast<int>(j));
  const std::size_t k1 = t.nonzero_index.size();
  t.m.assign(k1, std::vector<long long>(n, 0));

  bool has_units = true;
  for (int l = 0; l < n; ++l) has_units = has_units && A0.contains(unit_exponent(n, l));
  if (has_units) {
    for (std::size_t j = 0; j < k1; ++j)
      for (int l = 0; l < n; ++l)
        t.m[j][l] = A0[t.nonzero_index[j]] == unit_exponent(n, l) ? 1 : 0;
    return t;
  }

  IntMatrix A(n, std::vector<long long>(k1, 0));
  for (std::size_t j = 0; j < k1; ++j)
    for (int l = 0; l < n; ++l) A[l][j] = A0[t.nonzero_index[j]][l];
  SmithForm snf = smith_normal_form(A);
  if (static_cast<int>(snf.invariants.size()) < n ||
      std::any_of(snf.invariants.begin(), snf.invariants.end(), [](long long v) { return v != 1; }))
    throw LatticeConditionError("lattice not full");
  // A V[:, :n] = U^{-1}, hence A (V[:, :n] U) = I.
  for (std::size_t j = 0; j < k1; ++j)
    for (int l = 0; l < n; ++l) {
      long long s = 0;
      for (int q = 0; q < n; ++q) s += snf.V[j][q] * snf.U[q][l];
      t.m[j][l] = s;
    }
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      long long s = 0;
      for (std::size_t j = 0; j < k1; ++j) s += t.m[j][l] * A[r][j];
      if (s != (r == l ? 1 : 0)) throw std::logic_error("exponent recovery identity failed");
    }
  return t;
}

std::vector<Complex> recover_point(const std::vector<Complex>& ratios,
                                   const ExponentRecoveryTable& table) {
  if (ratios.size() != table.m.size()) throw std::invalid_argument("ratio vector has wrong length");
  std::vector<Complex> z(table.dim, 1.0);
  for (std::size_t j = 0; j < ratios.size(); ++j)
    for (int l = 0; l < table.dim; ++l) {
      long long e = table.m[j][l];
      if (e == 0) continue;
      if (e < 0 && ratios[j] == Complex(0.0)) throw CoordinateUndefined("coordinate undefined");
      Complex p = 1.0;
      for (long long k = 0; k < std::llabs(e); ++k) p *= ratios[j];
      z[l] *= e > 0 ? p : 1.0 / p;
    }
  return z;
}

}  // namespace eigensolver
