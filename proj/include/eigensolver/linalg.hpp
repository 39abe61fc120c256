#pragma once

#include <Eigen/Dense>
#include <vector>

#include "eigensolver/poly.hpp"

namespace eigensolver {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

class IllConditionedBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegeneratePencil : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace linalg {

Eigen::VectorXd singular_values(const CMatrix& M);

// Count of singular values above rtol * sigma_max.
int numerical_rank(const Eigen::VectorXd& sigma, double rtol);
int numerical_rank(const CMatrix& M, double rtol);

struct LeftNullspace {
  CMatrix basis;  // orthonormal rows, basis * M ~ 0
  Eigen::VectorXd sigma;
  int rank = 0;
};

// Real inputs take a real SVD; the result is then real as well.
LeftNullspace svd_left_nullspace(const CMatrix& M, double rtol);

struct PivotedQR {
  CMatrix Q;
  CMatrix R;
  std::vector<int> perm;  // N(:, perm) = Q R
};

PivotedQR qr_col_pivot(const CMatrix& N);

struct EigenCluster {
  Complex eigenvalue;
  std::vector<Complex> members;
  CMatrix left_basis;  // rows span the joint left eigenspace
};

struct EigenClusters {
  std::vector<EigenCluster> clusters;
  double cluster_tol = 0.0;
  double scale = 0.0;  // largest singular value of M, the unit for the merge test
};

EigenClusters left_eig_clustered(const CMatrix& M, double cluster_tol);

struct GepLeftPair {
  Complex mu;
  bool infinite = false;
  CRowVector c;  // c B1 = mu c B2
};

std::vector<GepLeftPair> gep_left(const CMatrix& B1, const CMatrix& B2);

// Solves L X = rhs for lower-triangular L.
CMatrix back_substitute(const CMatrix& L, const CMatrix& rhs);

CMatrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);
Eigen::MatrixXd random_real_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

bool is_real(const CMatrix& M);

}  // namespace linalg
}  // namespace eigensolver
