#include "eigensolver/macaulay.hpp"

#include <sstream>

namespace eigensolver {

namespace {

std::string exponent_str(const Exponent& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

void fill_columns(MacaulayMatrix& M, int tag, const Polynomial& f, const Support& E, Eigen::Index& col) {
  for (const auto& beta : E) {
    for (const auto& [alpha, c] : f.terms()) {
      long r = M.rows.index_of(alpha + beta);
      if (r < 0) throw CompatibilityError(tag, beta, alpha);
      M.data(r, col) = c;
    }
    M.cols.emplace_back(tag, beta);
    ++col;
  }
}

CMatrix compress(const CMatrix& M, Rng& rng, bool& compressed, double factor) {
  compressed = static_cast<double>(M.cols()) > factor * static_cast<double>(M.rows());
  if (!compressed) return M;
  // A real sketch keeps real problems on the real SVD path.
  if (linalg::is_real(M)) {
    Eigen::MatrixXd O = linalg::random_real_gaussian(M.cols(), M.rows(), rng);
    Eigen::MatrixXd P = M.real() * O;
    return P.cast<Complex>();
  }
  return M * linalg::random_complex_gaussian(M.cols(), M.rows(), rng);
}

}  // namespace

CompatibilityError::CompatibilityError(int i, Exponent b, Exponent a)
    : std::invalid_argument("compatibility violated: f_" + std::to_string(i) + ", beta " +
                            exponent_str(b) + " + alpha " + exponent_str(a) + " is not in D"),
      poly_index(i),
      beta(std::move(b)),
      alpha(std::move(a)) {}

MacaulayMatrix build_macaulay(const PolySystem& F, const std::vector<Support>& E, const Support& D) {
  if (E.size() != F.size()) throw std::invalid_argument("build_macaulay: need one E_i per polynomial");
  Eigen::Index ncols = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].dim() != D.dim() || (!E[i].empty() && E[i].dim() != D.dim()))
      throw std::invalid_argument("build_macaulay: dimension mismatch");
    ncols += static_cast<Eigen::Index>(E[i].size());
  }
  MacaulayMatrix M;
  M.rows = D;
  M.data = CMatrix::Zero(static_cast<Eigen::Index>(D.size()), ncols);
  M.cols.reserve(ncols);
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < F.size(); ++i) fill_columns(M, static_cast<int>(i) + 1, F[i], E[i], col);
  return M;
}

MacaulayMatrix build_macaulay(const Polynomial& f, const Support& E, const Support& D) {
  MacaulayMatrix M;
  M.rows = D;
  M.data = CMatrix::Zero(static_cast<Eigen::Index>(D.size()), static_cast<Eigen::Index>(E.size()));
  Eigen::Index col = 0;
  fill_columns(M, 0, f, E, col);
  return M;
}

int corank(const MacaulayMatrix& M, double rtol) {
  if (M.data.cols() == 0) return static_cast<int>(M.data.rows());
  return static_cast<int>(M.data.rows()) - linalg::numerical_rank(M.data, rtol);
}

CokernelBasis cokernel(const MacaulayMatrix& M, Rng& rng, const CokernelOptions& opts) {
  CokernelBasis C;
  C.cols = M.rows;
  C.rank_tol = opts.rtol;
  CMatrix work = compress(M.data, rng, C.compressed, opts.compression_factor);
  auto ns = linalg::svd_left_nullspace(work, opts.rtol);
  C.data = std::move(ns.basis);
  if (M.data.cols() > 0 && ns.rank == 0 && M.data.rows() > 0)
    C.warnings.push_back("Macaulay matrix is numerically zero; cokernel is the identity");
  return C;
}

CokernelBasis cokernel(const PolySystem& F, const std::vector<Support>& E, const Support& D,
                       Rng& rng, const CokernelOptions& opts) {
  return cokernel(build_macaulay(F, E, D), rng, opts);
}

CMatrix n_matrix(const CokernelBasis& C, const Polynomial& f0, const Support& E0) {
  CMatrix N = CMatrix::Zero(C.data.rows(), static_cast<Eigen::Index>(E0.size()));
  for (std::size_t k = 0; k < E0.size(); ++k)
    for (const auto& [alpha, c] : f0.terms()) {
      long r = C.cols.index_of(alpha + E0[k]);
      if (r < 0) throw CompatibilityError(0, E0[k], alpha);
      N.col(static_cast<Eigen::Index>(k)) += c * C.data.col(r);
    }
  return N;
}

bool rank_condition(const CokernelBasis& C, const Polynomial& f0, const Support& E0, double rtol) {
  if (C.gamma() == 0) return true;
  CMatrix N = n_matrix(C, f0, E0);
  return linalg::numerical_rank(N, rtol) == C.gamma();
}

CokernelBasis extend_cokernel(const CokernelBasis& C, const PolySystem& F,
                              const std::vector<Support>& E_new, const Support& D_next, Rng& rng,
                              const CokernelOptions& opts) {
  std::vector<Eigen::Index> old_pos;
  old_pos.reserve(C.cols.size());
  for (const auto& a : C.cols) {
    long p = D_next.index_of(a);
    if (p < 0) throw std::invalid_argument("extend_cokernel: previous D is not contained in D_next");
    old_pos.push_back(p);
  }
  Support fresh = D_next.set_difference(C.cols);
  bool no_columns = true;
  for (const auto& e : E_new) no_columns = no_columns && e.empty();
  if (no_columns && fresh.empty()) return C;

  std::vector<Eigen::Index> new_pos;
  for (const auto& a : fresh) new_pos.push_back(D_next.index_of(a));

  MacaulayMatrix Mn = build_macaulay(F, E_new, D_next);
  const Eigen::Index g = C.data.rows();
  const Eigen::Index nf = static_cast<Eigen::Index>(fresh.size());
  const Eigen::Index nc = Mn.data.cols();

  // [Coker 0; 0 id] * M(F, E_new; D_next), rows of M gathered by position.
  CMatrix old_rows(static_cast<Eigen::Index>(old_pos.size()), nc);
  for (std::size_t r = 0; r < old_pos.size(); ++r) old_rows.row(r) = Mn.data.row(old_pos[r]);
  CMatrix P(g + nf, nc);
  P.topRows(g) = C.data * old_rows;
  for (Eigen::Index r = 0; r < nf; ++r) P.row(g + r) = Mn.data.row(new_pos[r]);

  CokernelBasis out;
  out.cols = D_next;
  out.rank_tol = opts.rtol;
  CMatrix work = compress(P, rng, out.compressed, opts.compression_factor);
  CMatrix L = linalg::svd_left_nullspace(work, opts.rtol).basis;

  out.data = CMatrix::Zero(L.rows(), static_cast<Eigen::Index>(D_next.size()));
  CMatrix top = L.leftCols(g) * C.data;
  for (std::size_t k = 0; k < old_pos.size(); ++k) out.data.col(old_pos[k]) = top.col(k);
  for (Eigen::Index k = 0; k < nf; ++k) out.data.col(new_pos[k]) = L.col(g + k);
  return out;
}

std::string to_matrix_market(const MacaulayMatrix& M) {
  std::ostringstream os;
  os.precision(17);
  Eigen::Index nnz = 0;
  for (Eigen::Index j = 0; j < M.data.cols(); ++j)
    for (Eigen::Index i = 0; i < M.data.rows(); ++i) nnz += M.data(i, j) != Complex(0.0);
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << M.data.rows() << ' ' << M.data.cols() << ' ' << nnz << '\n';
  for (Eigen::Index j = 0; j < M.data.cols(); ++j)
    for (Eigen::Index i = 0; i < M.data.rows(); ++i)
      if (M.data(i, j) != Complex(0.0))
        os << i + 1 << ' ' << j + 1 << ' ' << M.data(i, j).real() << ' ' << M.data(i, j).imag() << '\n';
  return os.str();
}

}  // namespace eigensolver
