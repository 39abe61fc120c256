#include "eigensolver/poly.hpp"

#include <algorithm>
#include <cmath>

namespace eigensolver {

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : e) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent scaled(const Exponent& a, int k) {
  Exponent r(a);
  for (int& v : r) v *= k;
  return r;
}

Exponent unit_exponent(int dim, int l) {
  Exponent e(dim, 0);
  e.at(l) = 1;
  return e;
}

int total_degree(const Exponent& a) {
  int d = 0;
  for (int v : a) d += v;
  return d;
}

Support::Support(int dim) : dim_(dim) {
  index_ = std::make_shared<std::unordered_map<Exponent, long, ExponentHash>>();
}

Support::Support(int dim, std::vector<Exponent> exps) : dim_(dim), exps_(std::move(exps)) {
  if (dim < 0) throw InvalidSupport("negative dimension");
  for (const auto& e : exps_) {
    if (static_cast<int>(e.size()) != dim) throw InvalidSupport("exponent has wrong length");
    for (int v : e)
      if (v < 0) throw InvalidSupport("negative exponent entry");
  }
  std::sort(exps_.begin(), exps_.end());
  exps_.erase(std::unique(exps_.begin(), exps_.end()), exps_.end());
  auto idx = std::make_shared<std::unordered_map<Exponent, long, ExponentHash>>();
  idx->reserve(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) idx->emplace(exps_[i], static_cast<long>(i));
  index_ = std::move(idx);
}

long Support::index_of(const Exponent& e) const {
  if (!index_) return -1;
  auto it = index_->find(e);
  return it == index_->end() ? -1 : it->second;
}

bool Support::is_subset_of(const Support& other) const {
  if (dim_ != other.dim_ && !exps_.empty()) return false;
  for (const auto& e : exps_)
    if (!other.contains(e)) return false;
  return true;
}

Support Support::set_union(const Support& other) const {
  if (dim_ != other.dim_) throw InvalidSupport("support dimension mismatch");
  std::vector<Exponent> all(exps_);
  all.insert(all.end(), other.exps_.begin(), other.exps_.end());
  return Support(dim_, std::move(all));
}

Support Support::set_difference(const Support& other) const {
  if (dim_ != other.dim_) throw InvalidSupport("support dimension mismatch");
  std::vector<Exponent> out;
  for (const auto& e : exps_)
    if (!other.contains(e)) out.push_back(e);
  return Support(dim_, std::move(out));
}

Support Support::shifted(const Exponent& beta) const {
  std::vector<Exponent> out;
  out.reserve(exps_.size());
  for (const auto& e : exps_) out.push_back(e + beta);
  return Support(dim_, std::move(out));
}

Support minkowski_sum(const Support& a, const Support& b) {
  if (a.dim() != b.dim()) throw InvalidSupport("minkowski_sum: dimension mismatch");
  std::vector<Exponent> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  return Support(a.dim(), std::move(out));
}

Support cartesian_product(const std::vector<Support>& blocks) {
  if (blocks.empty()) throw InvalidSupport("cartesian_product: empty list");
  int dim = 0;
  std::vector<Exponent> cur{Exponent{}};
  for (const auto& b : blocks) {
    dim += b.dim();
    std::vector<Exponent> next;
    next.reserve(cur.size() * b.size());
    for (const auto& p : cur)
      for (const auto& e : b) {
        Exponent q(p);
        q.insert(q.end(), e.begin(), e.end());
        next.push_back(std::move(q));
      }
    cur = std::move(next);
  }
  return Support(dim, std::move(cur));
}

Polynomial::Polynomial(int dim, const std::map<Exponent, Complex>& terms) : dim_(dim) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

void Polynomial::add_term(const Exponent& e, Complex c) {
  if (static_cast<int>(e.size()) != dim_) throw InvalidSupport("term exponent has wrong length");
  for (int v : e)
    if (v < 0) throw InvalidSupport("negative exponent entry");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != Complex(0.0)) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0.0)) terms_.erase(it);
}

Polynomial Polynomial::monomial(const Exponent& e, Complex c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  double re = nd(rng);
  double im = nd(rng);
  return {re, im};
}

Polynomial Polynomial::random(const Support& support, Rng& rng, bool complex_coeffs) {
  if (support.empty()) throw InvalidSupport("random polynomial needs a nonempty support");
  std::normal_distribution<double> nd(0.0, 1.0);
  Polynomial p(support.dim());
  for (const auto& e : support) {
    Complex c;
    do {
      c = complex_coeffs ? complex_normal(rng) : Complex(nd(rng), 0.0);
    } while (c == Complex(0.0));
    p.terms_.emplace(e, c);
  }
  return p;
}

Complex Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

Support Polynomial::support() const {
  std::vector<Exponent> exps;
  exps.reserve(terms_.size());
  for (const auto& [e, c] : terms_) exps.push_back(e);
  return Support(dim_, std::move(exps));
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, eigensolver::total_degree(e));
  return d;
}

bool Polynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.imag() == 0.0; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.dim_ != dim_) throw InvalidSupport("polynomial dimension mismatch");
  Polynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1.0); }

Polynomial Polynomial::operator*(Complex c) const {
  Polynomial r(dim_);
  if (c == Complex(0.0)) return r;
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.dim_ != dim_) throw InvalidSupport("polynomial dimension mismatch");
  Polynomial r(dim_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Polynomial Polynomial::shifted(const Exponent& beta) const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + beta, c);
  return r;
}

Complex monomial_value(const Exponent& a, const std::vector<Complex>& z) {
  if (a.size() != z.size()) throw std::invalid_argument("evaluation point has wrong dimension");
  Complex v = 1.0;
  for (std::size_t l = 0; l < a.size(); ++l)
    for (int k = 0; k < a[l]; ++k) v *= z[l];
  return v;
}

std::vector<Complex> monomial_vector(const std::vector<Complex>& z, const Support& E) {
  if (static_cast<int>(z.size()) != E.dim())
    throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<Complex> out;
  out.reserve(E.size());
  for (const auto& a : E) out.push_back(monomial_value(a, z));
  return out;
}

Complex Polynomial::operator()(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Complex v = 0.0;
  for (const auto& [e, c] : terms_) v += c * monomial_value(e, z);
  return v;
}

double Polynomial::abs_sum(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  double v = 0.0;
  for (const auto& [e, c] : terms_) v += std::abs(c * monomial_value(e, z));
  return v;
}

int system_dim(const PolySystem& F) {
  if (F.empty()) throw std::invalid_argument("empty polynomial system");
  int n = F.front().dim();
  for (const auto& f : F)
    if (f.dim() != n) throw std::invalid_argument("polynomials in a system must share a dimension");
  return n;
}

std::vector<Support> supports_of(const PolySystem& F) {
  std::vector<Support> out;
  out.reserve(F.size());
  for (const auto& f : F) out.push_back(f.support());
  return out;
}

double backward_error(const PolySystem& F, const std::vector<Complex>& z) {
  system_dim(F);
  double acc = 0.0;
  for (const auto& f : F) acc += std::abs(f(z)) / (f.abs_sum(z) + 1.0);
  return acc / static_cast<double>(F.size());
}

}  // namespace eigensolver
