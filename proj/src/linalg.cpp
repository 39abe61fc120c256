#include "eigensolver/linalg.hpp"

#include <algorithm>
#include <complex>
#include <numeric>

#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>

namespace eigensolver::linalg {

namespace {

// Left singular vectors (all of them) and singular values of a real matrix.
bool real_svd_u(Eigen::MatrixXd A, Eigen::MatrixXd& U, Eigen::VectorXd& s) {
  const lapack_int m = static_cast<lapack_int>(A.rows());
  const lapack_int n = static_cast<lapack_int>(A.cols());
  const lapack_int k = std::min(m, n);
  U.resize(m, m);
  s.resize(k);
  // 'S' already yields the full U when m <= n.
  char jobz = m > n ? 'A' : 'S';
  lapack_int ldvt = jobz == 'A' ? n : k;
  Eigen::MatrixXd VT(ldvt, n);
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, jobz, m, n, A.data(), m, s.data(), U.data(),
                                   m, VT.data(), std::max<lapack_int>(1, ldvt));
  if (info == 0) return true;
  std::vector<double> superb(std::max<lapack_int>(1, k));
  double dummy = 0.0;
  info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'A', 'N', m, n, A.data(), m, s.data(), U.data(), m,
                        &dummy, 1, superb.data());
  return info == 0;
}

bool complex_svd_u(CMatrix A, CMatrix& U, Eigen::VectorXd& s) {
  const lapack_int m = static_cast<lapack_int>(A.rows());
  const lapack_int n = static_cast<lapack_int>(A.cols());
  const lapack_int k = std::min(m, n);
  U.resize(m, m);
  s.resize(k);
  char jobz = m > n ? 'A' : 'S';
  lapack_int ldvt = jobz == 'A' ? n : k;
  CMatrix VT(ldvt, n);
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, jobz, m, n, A.data(), m, s.data(), U.data(),
                                   m, VT.data(), std::max<lapack_int>(1, ldvt));
  if (info == 0) return true;
  std::vector<double> superb(std::max<lapack_int>(1, k));
  Complex dummy = 0.0;
  info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'A', 'N', m, n, A.data(), m, s.data(), U.data(), m,
                        &dummy, 1, superb.data());
  return info == 0;
}

}  // namespace

bool is_real(const CMatrix& M) {
  return M.size() == 0 || M.imag().cwiseAbs().maxCoeff() == 0.0;
}

Eigen::VectorXd singular_values(const CMatrix& M) {
  const Eigen::Index k = std::min(M.rows(), M.cols());
  Eigen::VectorXd s(k);
  if (k == 0) return s;
  lapack_int info;
  if (is_real(M)) {
    Eigen::MatrixXd A = M.real();
    info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', A.rows(), A.cols(), A.data(), A.rows(), s.data(),
                          nullptr, 1, nullptr, 1);
  } else {
    CMatrix A = M;
    info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', A.rows(), A.cols(), A.data(), A.rows(), s.data(),
                          nullptr, 1, nullptr, 1);
  }
  if (info != 0) {
    Eigen::BDCSVD<CMatrix> svd(M);
    s = svd.singularValues();
  }
  return s;
}

int numerical_rank(const Eigen::VectorXd& sigma, double rtol) {
  if (sigma.size() == 0) return 0;
  const double smax = sigma.maxCoeff();
  if (!(smax > 0.0)) return 0;
  return static_cast<int>((sigma.array() > rtol * smax).count());
}

int numerical_rank(const CMatrix& M, double rtol) { return numerical_rank(singular_values(M), rtol); }

LeftNullspace svd_left_nullspace(const CMatrix& M, double rtol) {
  if (!(rtol > 0.0 && rtol < 1.0)) throw std::invalid_argument("rtol must lie in (0,1)");
  LeftNullspace out;
  const Eigen::Index m = M.rows();
  if (M.cols() == 0 || m == 0) {
    out.basis = CMatrix::Identity(m, m);
    return out;
  }
  bool ok;
  if (is_real(M)) {
    Eigen::MatrixXd U;
    ok = real_svd_u(M.real(), U, out.sigma);
    if (ok) {
      out.rank = numerical_rank(out.sigma, rtol);
      out.basis = U.rightCols(m - out.rank).transpose().cast<Complex>();
    }
  } else {
    CMatrix U;
    ok = complex_svd_u(M, U, out.sigma);
    if (ok) {
      out.rank = numerical_rank(out.sigma, rtol);
      out.basis = U.rightCols(m - out.rank).adjoint();
    }
  }
  if (!ok) throw std::runtime_error("SVD failed to converge");
  return out;
}

PivotedQR qr_col_pivot(const CMatrix& N) {
  if (N.cols() < N.rows()) throw std::invalid_argument("qr_col_pivot needs at least as many columns as rows");
  Eigen::ColPivHouseholderQR<CMatrix> qr(N);
  PivotedQR out;
  out.Q = qr.householderQ();
  out.R = qr.matrixQR().triangularView<Eigen::Upper>();
  const auto& idx = qr.colsPermutation().indices();
  out.perm.assign(idx.data(), idx.data() + idx.size());
  return out;
}

EigenClusters left_eig_clustered(const CMatrix& M, double cluster_tol) {
  if (M.rows() != M.cols()) throw std::invalid_argument("left_eig_clustered needs a square matrix");
  if (!(cluster_tol > 0.0 && cluster_tol < 1.0)) throw std::invalid_argument("cluster_tol must lie in (0,1)");
  const lapack_int n = static_cast<lapack_int>(M.rows());
  EigenClusters out;
  out.cluster_tol = cluster_tol;
  if (n == 0) return out;

  CMatrix A = M;
  CVector w(n);
  CMatrix VL(n, n);
  Complex dummy = 0.0;
  lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'V', 'N', n, A.data(), n, w.data(), VL.data(), n, &dummy, 1);
  if (info != 0) throw std::runtime_error("eigendecomposition failed");

  Eigen::VectorXd sv = singular_values(M);
  out.scale = sv.size() ? sv.maxCoeff() : 0.0;
  const double tol = cluster_tol * out.scale;

  // Single-linkage merge of eigenvalues closer than tol.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(w(i) - w(j)) <= tol) parent[find(i)] = find(j);

  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }

  for (const auto& g : groups) {
    EigenCluster c;
    Complex mean = 0.0;
    CMatrix stack(g.size(), n);
    for (std::size_t k = 0; k < g.size(); ++k) {
      c.members.push_back(w(g[k]));
      mean += w(g[k]);
      stack.row(k) = VL.col(g[k]).adjoint();
    }
    c.eigenvalue = mean / static_cast<double>(g.size());
    if (g.size() == 1) {
      c.left_basis = stack / stack.norm();
    } else {
      Eigen::JacobiSVD<CMatrix> svd(stack, Eigen::ComputeThinV);
      const auto& s = svd.singularValues();
      int r = 0;
      while (r < s.size() && s(r) > 1e-8 * s(0)) ++r;
      c.left_basis = svd.matrixV().leftCols(r).adjoint();
    }
    out.clusters.push_back(std::move(c));
  }
  return out;
}

std::vector<GepLeftPair> gep_left(const CMatrix& B1, const CMatrix& B2) {
  if (B1.rows() != B1.cols() || B2.rows() != B2.cols() || B1.rows() != B2.rows())
    throw std::invalid_argument("gep_left needs square matrices of equal size");
  const lapack_int n = static_cast<lapack_int>(B1.rows());
  std::vector<GepLeftPair> out;
  if (n == 0) return out;
  const double n1 = B1.cwiseAbs().maxCoeff();
  const double n2 = B2.cwiseAbs().maxCoeff();
  if (n1 <= 1e-300 && n2 <= 1e-300) throw DegeneratePencil("degenerate pencil");

  CMatrix A = B1, B = B2;
  CVector alpha(n), beta(n);
  CMatrix VL(n, n);
  Complex dummy = 0.0;
  lapack_int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'V', 'N', n, A.data(), n, B.data(), n,
                                  alpha.data(), beta.data(), VL.data(), n, &dummy, 1);
  if (info != 0) throw std::runtime_error("generalized eigendecomposition failed");
  for (lapack_int j = 0; j < n; ++j) {
    GepLeftPair p;
    const double a = std::abs(alpha(j)), b = std::abs(beta(j));
    p.infinite = b <= 1e-12 * std::max(a, b) || (a <= 1e-14 * n1 && b <= 1e-14 * n2);
    p.mu = p.infinite ? Complex(std::numeric_limits<double>::infinity(), 0.0) : alpha(j) / beta(j);
    p.c = VL.col(j).adjoint();
    const double cn = p.c.norm();
    if (cn > 0.0) p.c /= cn;
    out.push_back(std::move(p));
  }
  return out;
}

CMatrix back_substitute(const CMatrix& L, const CMatrix& rhs) {
  if (L.rows() != L.cols() || rhs.rows() != L.rows())
    throw std::invalid_argument("back_substitute: shape mismatch");
  if (L.rows() == 0) return rhs;
  const Eigen::VectorXd d = L.diagonal().cwiseAbs();
  if (d.minCoeff() <= 1e-14 * d.maxCoeff())
    throw IllConditionedBasis("basis ill-conditioned; re-draw f0");
  return L.triangularView<Eigen::Lower>().solve(rhs);
}

CMatrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMatrix O(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) O(i, j) = complex_normal(rng);
  return O;
}

Eigen::MatrixXd random_real_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd O(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) O(i, j) = nd(rng);
  return O;
}

}  // namespace eigensolver::linalg
