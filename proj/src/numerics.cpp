#include "lsr/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace lsr {

namespace {

struct Svd {
  Matrix u;               // rows x k, thin
  Eigen::VectorXd sigma;  // k
  Matrix v;               // cols x k, thin
};

Svd thin_svd(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    return {Matrix(m.rows(), 0), Eigen::VectorXd(0), Matrix(m.cols(), 0)};
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

int rank_from_spectrum(const Eigen::VectorXd& sigma, double rank_tol,
                       bool* borderline) {
  if (borderline) *borderline = false;
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double cut = rank_tol * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++rank;
    if (borderline && sigma(i) > cut / 10.0 && sigma(i) < cut * 10.0)
      *borderline = true;
  }
  return rank;
}

}  // namespace

RankDecision rank_decision(const Matrix& m, double rank_tol) {
  RankDecision out;
  out.tol = rank_tol;
  out.singular_values = thin_svd(m).sigma;
  out.rank = rank_from_spectrum(out.singular_values, rank_tol, &out.borderline);
  return out;
}

RankFactorization rank_factorize(const Matrix& h, double rank_tol) {
  RankFactorization out;
  out.tol = rank_tol;
  const Svd svd = thin_svd(h);
  out.singular_values = svd.sigma;
  out.rank = rank_from_spectrum(svd.sigma, rank_tol, &out.borderline);
  const Eigen::VectorXd root =
      svd.sigma.head(out.rank).array().sqrt().matrix();
  out.left = svd.u.leftCols(out.rank) * root.asDiagonal();
  out.right = root.asDiagonal() * svd.v.leftCols(out.rank).transpose();
  return out;
}

Matrix pseudoinverse(const Matrix& m, double rank_tol) {
  const Svd svd = thin_svd(m);
  const int rank = rank_from_spectrum(svd.sigma, rank_tol, nullptr);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(svd.sigma.size());
  for (int i = 0; i < rank; ++i) inv(i) = 1.0 / svd.sigma(i);
  return svd.v * inv.asDiagonal() * svd.u.transpose();
}

int numerical_rank(const Matrix& m, double rank_tol) {
  const Svd svd = thin_svd(m);
  return rank_from_spectrum(svd.sigma, rank_tol, nullptr);
}

Matrix image_basis(const Matrix& m, double rank_tol) {
  const Svd svd = thin_svd(m);
  const int rank = rank_from_spectrum(svd.sigma, rank_tol, nullptr);
  return svd.u.leftCols(rank);
}

Matrix kernel_basis(const Matrix& m, double rank_tol) {
  if (m.cols() == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const int rank = rank_from_spectrum(svd.singularValues(), rank_tol, nullptr);
  return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix orth_complement(const Matrix& u, double rank_tol) {
  if (u.cols() == 0) return Matrix::Identity(u.rows(), u.rows());
  return kernel_basis(u.transpose(), rank_tol);
}

Matrix intersect_subspaces(const Matrix& u, const Matrix& v, double rank_tol) {
  if (u.rows() != v.rows())
    throw DimensionError("subspaces live in different ambient spaces");
  const auto n = u.rows();
  // x lies in both spans iff it is annihilated by both complements.
  const Matrix cu = orth_complement(image_basis(u, rank_tol), rank_tol);
  const Matrix cv = orth_complement(image_basis(v, rank_tol), rank_tol);
  Matrix stacked(cu.cols() + cv.cols(), n);
  stacked.topRows(cu.cols()) = cu.transpose();
  stacked.bottomRows(cv.cols()) = cv.transpose();
  return kernel_basis(stacked, rank_tol);
}

Eigen::VectorXd principal_angles(const Matrix& u, const Matrix& v, double rank_tol) {
  if (u.rows() != v.rows())
    throw DimensionError("subspaces live in different ambient spaces");
  const Matrix bu = image_basis(u, rank_tol);
  const Matrix bv = image_basis(v, rank_tol);
  const Svd svd = thin_svd(bu.transpose() * bv);
  Eigen::VectorXd angles(svd.sigma.size());
  for (Eigen::Index i = 0; i < svd.sigma.size(); ++i)
    angles(i) = std::acos(std::clamp(svd.sigma(i), -1.0, 1.0));
  std::sort(angles.data(), angles.data() + angles.size());
  return angles;
}

bool same_subspace(const Matrix& u, const Matrix& v, double rank_tol,
                   double angle_tol) {
  const Matrix bu = image_basis(u, rank_tol);
  const Matrix bv = image_basis(v, rank_tol);
  if (bu.cols() != bv.cols()) return false;
  if (bu.cols() == 0) return true;
  const Eigen::VectorXd angles = principal_angles(bu, bv, rank_tol);
  return angles.maxCoeff() < angle_tol;
}

}  // namespace lsr
