#pragma once

#include "lsr/common.hpp"

namespace lsr {

/// Rank decision backed by the full singular spectrum. The rank counts the
/// singular values above rank_tol * sigma_max; borderline flags any value
/// within a factor 10 of that threshold on either side.
struct RankDecision {
  int rank = 0;
  Eigen::VectorXd singular_values;
  double tol = 0.0;
  bool borderline = false;
};

RankDecision rank_decision(const Matrix& m, double rank_tol);

/// Rank-revealing factorization H = left * right with
/// left = U sqrt(Sigma), right = sqrt(Sigma) V^T truncated at the numerical
/// rank, so Rank left = Rank right = rank.
struct RankFactorization {
  Matrix left;   // rows x rank
  Matrix right;  // rank x cols
  Eigen::VectorXd singular_values;
  int rank = 0;
  double tol = 0.0;
  bool borderline = false;
};

RankFactorization rank_factorize(const Matrix& h, double rank_tol);

/// Moore-Penrose pseudoinverse, singular values below rank_tol * sigma_max
/// treated as zero.
Matrix pseudoinverse(const Matrix& m, double rank_tol);

int numerical_rank(const Matrix& m, double rank_tol);

/// Orthonormal basis of the column space.
Matrix image_basis(const Matrix& m, double rank_tol);

/// Orthonormal basis of the null space.
Matrix kernel_basis(const Matrix& m, double rank_tol);

/// Orthonormal basis of the orthogonal complement of span(u) inside the
/// ambient space R^(u.rows()).
Matrix orth_complement(const Matrix& u, double rank_tol);

/// Orthonormal basis of span(u) `intersect` span(v); both arguments are
/// interpreted as generators, not required to be orthonormal.
Matrix intersect_subspaces(const Matrix& u, const Matrix& v, double rank_tol);

/// Principal angles between span(u) and span(v), ascending, in [0, pi/2].
/// The number of angles is min(dim u, dim v).
Eigen::VectorXd principal_angles(const Matrix& u, const Matrix& v, double rank_tol);

/// True when the two spans have equal dimension and all principal angles stay
/// below angle_tol.
bool same_subspace(const Matrix& u, const Matrix& v, double rank_tol,
                   double angle_tol);

}  // namespace lsr
