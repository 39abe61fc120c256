#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace eigensolver {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

// Exponent vector of a monomial x^a. Ordered lexicographically.
using Exponent = std::vector<int>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent scaled(const Exponent& a, int k);
Exponent unit_exponent(int dim, int l);
int total_degree(const Exponent& a);

class InvalidSupport : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite set of exponents in N^n, kept sorted and deduplicated. Positions are
// stable, so a Support doubles as a row/column indexing scheme.
class Support {
 public:
  Support() = default;
  explicit Support(int dim);
  Support(int dim, std::vector<Exponent> exps);

  int dim() const { return dim_; }
  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  const Exponent& operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  // -1 when absent.
  long index_of(const Exponent& e) const;
  bool contains(const Exponent& e) const { return index_of(e) >= 0; }
  bool is_subset_of(const Support& other) const;

  Support set_union(const Support& other) const;
  Support set_difference(const Support& other) const;
  Support shifted(const Exponent& beta) const;

  bool operator==(const Support& other) const {
    return dim_ == other.dim_ && exps_ == other.exps_;
  }

 private:
  int dim_ = 0;
  std::vector<Exponent> exps_;
  std::shared_ptr<const std::unordered_map<Exponent, long, ExponentHash>> index_;
};

// Pointwise sum {a + b}.
Support minkowski_sum(const Support& a, const Support& b);
Support cartesian_product(const std::vector<Support>& blocks);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {}
  Polynomial(int dim, const std::map<Exponent, Complex>& terms);

  static Polynomial monomial(const Exponent& e, Complex c = 1.0);
  static Polynomial random(const Support& support, Rng& rng, bool complex_coeffs);

  int dim() const { return dim_; }
  const std::map<Exponent, Complex>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Complex coeff(const Exponent& e) const;
  Support support() const;
  int total_degree() const;
  bool is_real() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(Complex c) const;
  Polynomial operator*(const Polynomial& o) const;
  // x^beta * p
  Polynomial shifted(const Exponent& beta) const;

  Complex operator()(const std::vector<Complex>& z) const;
  // sum_a |c_a z^a|
  double abs_sum(const std::vector<Complex>& z) const;

 private:
  void add_term(const Exponent& e, Complex c);

  int dim_ = 0;
  std::map<Exponent, Complex> terms_;
};

using PolySystem = std::vector<Polynomial>;

int system_dim(const PolySystem& F);
std::vector<Support> supports_of(const PolySystem& F);

// z^a for a in N^n.
Complex monomial_value(const Exponent& a, const std::vector<Complex>& z);
// (z^a : a in E) in E's order.
std::vector<Complex> monomial_vector(const std::vector<Complex>& z, const Support& E);

// (1/s) sum_i |f_i(z)| / (sum_a |c_{i,a} z^a| + 1)
double backward_error(const PolySystem& F, const std::vector<Complex>& z);

Complex complex_normal(Rng& rng);

}  // namespace eigensolver
