#include "eigensolver/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace eigensolver {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::vector<Complex> random_coeffs(std::size_t k, Rng& rng) {
  std::vector<Complex> c(k);
  for (auto& v : c) v = complex_normal(rng);
  return c;
}

// Columns of Coker at alpha + b for b in B, i.e. N_{x^alpha, B}.
CMatrix shifted_columns(const CokernelBasis& C, const Exponent& alpha, const std::vector<Exponent>& B) {
  CMatrix N(C.data.rows(), static_cast<Eigen::Index>(B.size()));
  for (std::size_t k = 0; k < B.size(); ++k) {
    long r = C.cols.index_of(alpha + B[k]);
    if (r < 0) throw CompatibilityError(0, B[k], alpha);
    N.col(static_cast<Eigen::Index>(k)) = C.data.col(r);
  }
  return N;
}

double rel_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += std::norm(a[i] - b[i]);
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  const double scale = std::sqrt(std::max(na, nb));
  return scale > 0.0 ? std::sqrt(d) / scale : std::sqrt(d);
}

}  // namespace

CMatrix MgFamily::combine(const std::vector<Complex>& coeffs) const {
  if (coeffs.size() != Mx.size()) throw std::invalid_argument("need one coefficient per element of A0");
  CMatrix M = CMatrix::Zero(gamma(), gamma());
  for (std::size_t j = 0; j < Mx.size(); ++j) M += coeffs[j] * Mx[j];
  return M;
}

CMatrix MgFamily::of(const Polynomial& g) const {
  std::vector<Complex> c(A0.size(), 0.0);
  for (const auto& [e, v] : g.terms()) {
    long j = A0.index_of(e);
    if (j < 0) throw std::invalid_argument("polynomial support is not contained in A0");
    c[j] = v;
  }
  return combine(c);
}

MgFamily build_mg_family(const CokernelBasis& C, const AdmissibleTuple& tuple, const Polynomial& f0,
                         double rtol) {
  const Support& E0 = tuple.E.at(0);
  MgFamily fam;
  fam.A0 = tuple.A0;
  fam.f0 = f0;
  const int gamma = C.gamma();
  if (gamma == 0) {
    fam.Mx.assign(tuple.A0.size(), CMatrix(0, 0));
    return fam;
  }
  CMatrix N = n_matrix(C, f0, E0);
  if (N.cols() < gamma || linalg::numerical_rank(N, rtol) != gamma)
    throw RankConditionError("N_f0 does not have full row rank");

  auto qr = linalg::qr_col_pivot(N);
  for (int k = 0; k < gamma; ++k) fam.basis.push_back(E0[qr.perm[k]]);
  fam.Q0 = qr.Q;
  fam.Rhat0 = qr.R.leftCols(gamma);
  const CMatrix Rstar = fam.Rhat0.adjoint();

  for (const auto& alpha : tuple.A0) {
    CMatrix Nx = shifted_columns(C, alpha, fam.basis);
    CMatrix X = linalg::back_substitute(Rstar, Nx.adjoint() * fam.Q0);
    fam.Mx.push_back(X.adjoint());
  }
  return fam;
}

CMatrix multiplication_matrix(const CokernelBasis& C, const Polynomial& g, const Polynomial& f0,
                              const std::vector<Exponent>& B) {
  auto n_of = [&](const Polynomial& p) {
    CMatrix N = CMatrix::Zero(C.data.rows(), static_cast<Eigen::Index>(B.size()));
    for (const auto& [alpha, c] : p.terms()) N += c * shifted_columns(C, alpha, B);
    return N;
  };
  CMatrix Nf = n_of(f0);
  // M_g = N_g Nf^{-1}  <=>  Nf^T M_g^T = N_g^T
  return Nf.transpose().partialPivLu().solve(n_of(g).transpose()).transpose();
}

EigenspaceResult get_eigenspace(Complex mu, const CMatrix& V, const CMatrix& Mh, double rtol, Rng& rng) {
  EigenspaceResult res;
  const Eigen::Index m = V.rows();
  const Eigen::Index gamma = Mh.rows();
  res.basis = CMatrix(0, gamma);
  if (m == 0) return res;
  const double hn = Mh.norm();
  if (hn == 0.0) {
    res.basis = V;
    return res;
  }
  const CMatrix VM = V * Mh;

  if (m == 1) {
    CMatrix W(2, gamma);
    W.row(0) = V.row(0) / V.row(0).norm();
    W.row(1) = VM.row(0) / (V.row(0).norm() * hn);
    Eigen::VectorXd s = linalg::singular_values(W);
    if (s.size() < 2 || s(1) <= rtol * s(0)) res.basis = V;
    return res;
  }

  const CMatrix O = linalg::random_complex_gaussian(gamma, m, rng);
  auto pairs = linalg::gep_left(VM * O, V * O);
  std::vector<std::pair<Complex, CRowVector>> hits;
  for (const auto& p : pairs) {
    if (p.infinite) continue;
    CRowVector w = p.c * V;
    const double wn = w.norm();
    if (wn == 0.0) continue;
    if ((p.c * VM - p.mu * w).norm() <= rtol * hn * wn) hits.emplace_back(p.mu, w / wn);
  }
  if (hits.empty()) return res;
  for (const auto& h : hits)
    if (std::abs(h.first - hits.front().first) > rtol * hn) {
      res.diagnostic = "several eigenvalues of M_h qualify on the eigenspace of M_g at " +
                       std::to_string(mu.real()) + (mu.imag() < 0 ? "" : "+") +
                       std::to_string(mu.imag()) + "i";
      return res;
    }
  CMatrix stack(static_cast<Eigen::Index>(hits.size()), gamma);
  for (std::size_t k = 0; k < hits.size(); ++k) stack.row(k) = hits[k].second;
  Eigen::JacobiSVD<CMatrix> svd(stack, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > 1e-8 * s(0)) ++r;
  res.basis = svd.matrixV().leftCols(r).adjoint();
  return res;
}

std::vector<Complex> extract_root(const CMatrix& V, const MgFamily& fam,
                                  const ExponentRecoveryTable& table, Rng& rng) {
  const Eigen::Index m = V.rows();
  if (m == 0) throw std::invalid_argument("extract_root needs a nonempty eigenspace");
  std::vector<Complex> lam(fam.Mx.size());
  if (m == 1) {
    const Complex vv = V.row(0).squaredNorm();
    for (std::size_t j = 0; j < fam.Mx.size(); ++j)
      lam[j] = (V.row(0) * fam.Mx[j] * V.row(0).adjoint())(0, 0) / vv;
  } else {
    const CMatrix T = linalg::random_complex_gaussian(V.cols(), m, rng);
    Eigen::PartialPivLU<CMatrix> lu(V * T);
    for (std::size_t j = 0; j < fam.Mx.size(); ++j) {
      // trace(V M T (V T)^{-1}) = trace((V T)^{-1} V M T)
      lam[j] = lu.solve(V * fam.Mx[j] * T).trace() / static_cast<double>(m);
    }
  }
  double largest = 0.0;
  for (const auto& l : lam) largest = std::max(largest, std::abs(l));
  const Complex base = lam.at(table.base_index);
  if (!(std::abs(base) > 1e-12 * largest)) throw RootExtractionError("eigenvalue not a root candidate");
  std::vector<Complex> ratios;
  ratios.reserve(table.nonzero_index.size());
  for (int j : table.nonzero_index) ratios.push_back(lam[j] / base);
  return recover_point(ratios, table);
}

SolveReport solve(const PolySystem& F, const AdmissibleTuple& tuple, const SolveOptions& opts) {
  const auto t_start = Clock::now();
  SolveReport rep;
  rep.seed = opts.seed;
  rep.tolerances = opts;
  rep.tolerances.precomputed.reset();
  rep.d_size = static_cast<int>(tuple.D.size());
  rep.A0 = tuple.A0;

  check_compatibility(tuple, supports_of(F));
  const ExponentRecoveryTable table = check_lattice(tuple);
  Rng rng(opts.seed);

  auto t0 = Clock::now();
  CokernelBasis C;
  if (opts.precomputed) {
    C = opts.precomputed->cokernel;
    if (!(C.cols == tuple.D)) throw std::invalid_argument("precomputed cokernel does not match the tuple's D");
  } else {
    std::vector<Support> Es(tuple.E.begin() + 1, tuple.E.end());
    C = cokernel(F, Es, tuple.D, rng, CokernelOptions{opts.rtol, opts.compression_factor});
  }
  rep.diagnostics.insert(rep.diagnostics.end(), C.warnings.begin(), C.warnings.end());
  rep.timings["cokernel"] = seconds_since(t0);
  rep.gamma = C.gamma();
  if (rep.gamma == 0) {
    rep.timings["total"] = seconds_since(t_start);
    return rep;
  }

  t0 = Clock::now();
  MgFamily fam;
  bool built = false;
  for (int attempt = 0; attempt <= opts.max_f0_redraws && !built; ++attempt) {
    Polynomial f0 = attempt == 0 && opts.precomputed ? opts.precomputed->f0
                                                     : Polynomial::random(tuple.A0, rng, true);
    ++rep.f0_draws;
    try {
      fam = build_mg_family(C, tuple, f0, opts.rtol);
      built = true;
    } catch (const RankConditionError& e) {
      rep.diagnostics.push_back(std::string("f0 draw rejected: ") + e.what());
    } catch (const IllConditionedBasis& e) {
      rep.diagnostics.push_back(std::string("f0 draw rejected: ") + e.what());
    }
  }
  if (!built) throw RankConditionError("rank condition failed: tuple too small or Assumption violated");
  rep.f0 = fam.f0;
  rep.timings["family"] = seconds_since(t0);

  t0 = Clock::now();
  rep.g_coeffs = random_coeffs(tuple.A0.size(), rng);
  const std::vector<Complex> h_coeffs = random_coeffs(tuple.A0.size(), rng);
  const CMatrix Mg = fam.combine(rep.g_coeffs);
  const CMatrix Mh = fam.combine(h_coeffs);
  const auto clusters = linalg::left_eig_clustered(Mg, opts.cluster_tol);
  rep.clusters = static_cast<int>(clusters.clusters.size());
  rep.timings["eigen"] = seconds_since(t0);

  t0 = Clock::now();
  std::vector<Solution> candidates;
  for (std::size_t k = 0; k < clusters.clusters.size(); ++k) {
    const auto& cl = clusters.clusters[k];
    Rng crng(splitmix64(opts.seed ^ splitmix64(k + 1)));
    auto es = get_eigenspace(cl.eigenvalue, cl.left_basis, Mh, opts.eigenspace_tol, crng);
    if (!es.diagnostic.empty()) rep.diagnostics.push_back(es.diagnostic);
    if (es.basis.rows() == 0) continue;
    try {
      Solution s;
      s.z = extract_root(es.basis, fam, table, crng);
      s.bwe = backward_error(F, s.z);
      s.eigenvalue = cl.eigenvalue;
      if (std::isfinite(s.bwe)) candidates.push_back(std::move(s));
    } catch (const RootExtractionError&) {
    } catch (const CoordinateUndefined& e) {
      rep.diagnostics.push_back(std::string("root with a zero coordinate skipped: ") + e.what());
    }
  }
  rep.candidates_total = static_cast<int>(candidates.size());

  std::sort(candidates.begin(), candidates.end(),
            [](const Solution& a, const Solution& b) { return a.bwe < b.bwe; });
  for (auto& c : candidates) {
    if (!(c.bwe <= opts.bwe_threshold)) continue;
    bool dup = std::any_of(rep.solutions.begin(), rep.solutions.end(),
                           [&](const Solution& s) { return rel_distance(s.z, c.z) < opts.merge_tol; });
    if (!dup) rep.solutions.push_back(std::move(c));
  }
  rep.timings["extract"] = seconds_since(t0);
  rep.timings["total"] = seconds_since(t_start);
  return rep;
}

}  // namespace eigensolver
