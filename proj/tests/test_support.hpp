#pragma once

// Shared generators and independent reference computations for the test
// suites. The reductions implemented here follow the explicit basis-change
// recipe (split the state space along the invariant subspace, keep one
// block); the library routes everything through the series-representation
// engine, so agreement between the two is a meaningful cross-check.

#include <random>
#include <vector>

#include "lsr/bridge.hpp"
#include "lsr/lss.hpp"
#include "lsr/numerics.hpp"
#include "lsr/rational.hpp"
#include "lsr/realization.hpp"

namespace lsr::test {

using Rng = std::mt19937;

inline Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

inline Vector random_vector(Rng& rng, Eigen::Index size) {
  return random_matrix(rng, size, 1).col(0);
}

/// Random transition matrix scaled to spectral norm 0.9 so that long word
/// products stay at a benign magnitude.
inline Matrix random_transition(Rng& rng, Eigen::Index n) {
  Matrix a = random_matrix(rng, n, n);
  if (n > 0) {
    const double top = a.jacobiSvd().singularValues()(0);
    if (top > 0) a *= 0.9 / top;
  }
  return a;
}

inline SwitchedLinearSystem random_system(Rng& rng, int n, int modes, int m,
                                          int p) {
  std::vector<Matrix> a, b, c;
  for (int q = 0; q < modes; ++q) {
    a.push_back(random_transition(rng, n));
    b.push_back(random_matrix(rng, n, m));
    c.push_back(random_matrix(rng, p, n));
  }
  return SwitchedLinearSystem(a, b, c, random_vector(rng, n));
}

inline SwitchedLinearSystem random_minimal_system(Rng& rng, int n, int modes,
                                                  int m, int p) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    SwitchedLinearSystem sys = random_system(rng, n, modes, m, p);
    if (is_span_reachable(sys) && is_observable(sys)) return sys;
  }
  throw Error("could not draw a minimal system");
}

inline RationalRepresentation random_repr(Rng& rng, int n, int alphabet,
                                          int index_count, int coeff_dim) {
  std::vector<Matrix> a;
  for (int s = 0; s < alphabet; ++s) a.push_back(random_transition(rng, n));
  std::vector<Vector> b;
  for (int j = 0; j < index_count; ++j) b.push_back(random_vector(rng, n));
  return RationalRepresentation(a, b, random_matrix(rng, coeff_dim, n));
}

/// Change of state coordinates by an invertible matrix; the matrix itself is
/// then a system morphism from sys onto the result.
inline SwitchedLinearSystem conjugate(const SwitchedLinearSystem& sys,
                                      const Matrix& s) {
  const Matrix s_inv = s.inverse();
  std::vector<Matrix> a, b, c;
  for (int q = 1; q <= sys.mode_count(); ++q) {
    a.push_back(s * sys.A(q) * s_inv);
    b.push_back(s * sys.B(q));
    c.push_back(sys.C(q) * s_inv);
  }
  return SwitchedLinearSystem(a, b, c, s * sys.initial_state());
}

/// Well-conditioned random invertible matrix: orthonormal factor times a
/// diagonal with entries in [0.5, 2].
inline Matrix random_invertible(Rng& rng, Eigen::Index n) {
  const Matrix q = Eigen::HouseholderQR<Matrix>(random_matrix(rng, n, n))
                       .householderQ();
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  Vector scale(n);
  for (Eigen::Index i = 0; i < n; ++i) scale(i) = dist(rng);
  return q * scale.asDiagonal();
}

/// Appends k states that no input or initial condition excites.
inline SwitchedLinearSystem pad_unreachable(Rng& rng,
                                            const SwitchedLinearSystem& sys,
                                            int k) {
  const int n = sys.state_dim();
  std::vector<Matrix> a, b, c;
  for (int q = 1; q <= sys.mode_count(); ++q) {
    Matrix aq = Matrix::Zero(n + k, n + k);
    aq.topLeftCorner(n, n) = sys.A(q);
    aq.topRightCorner(n, k) = random_matrix(rng, n, k);
    aq.bottomRightCorner(k, k) = random_transition(rng, k);
    a.push_back(aq);
    Matrix bq = Matrix::Zero(n + k, sys.input_dim());
    bq.topRows(n) = sys.B(q);
    b.push_back(bq);
    Matrix cq(sys.output_dim(), n + k);
    cq.leftCols(n) = sys.C(q);
    cq.rightCols(k) = random_matrix(rng, sys.output_dim(), k);
    c.push_back(cq);
  }
  Vector x0 = Vector::Zero(n + k);
  x0.head(n) = sys.initial_state();
  return SwitchedLinearSystem(a, b, c, x0);
}

/// Appends k states that never influence any output.
inline SwitchedLinearSystem pad_unobservable(Rng& rng,
                                             const SwitchedLinearSystem& sys,
                                             int k) {
  const int n = sys.state_dim();
  std::vector<Matrix> a, b, c;
  for (int q = 1; q <= sys.mode_count(); ++q) {
    Matrix aq = Matrix::Zero(n + k, n + k);
    aq.topLeftCorner(n, n) = sys.A(q);
    aq.bottomLeftCorner(k, n) = random_matrix(rng, k, n);
    aq.bottomRightCorner(k, k) = random_transition(rng, k);
    a.push_back(aq);
    Matrix bq(n + k, sys.input_dim());
    bq.topRows(n) = sys.B(q);
    bq.bottomRows(k) = random_matrix(rng, k, sys.input_dim());
    b.push_back(bq);
    Matrix cq = Matrix::Zero(sys.output_dim(), n + k);
    cq.leftCols(n) = sys.C(q);
    c.push_back(cq);
  }
  Vector x0(n + k);
  x0.head(n) = sys.initial_state();
  x0.tail(k) = random_vector(rng, k);
  return SwitchedLinearSystem(a, b, c, x0);
}

/// Output by the explicit expansion
///   y(x, w) = C_{q_t} A_{q_0..q_{t-1}} x + sum_j C_{q_t} A_{q_{j+1}..q_{t-1}} B_{q_j} u_j,
/// an independent path around the step-by-step recursion.
inline Vector closed_form_output(const SwitchedLinearSystem& sys, const Vector& x,
                                 const HybridWord& w) {
  const ModeWord& v = w.modes();
  const int t = v.size() - 1;
  const Matrix& ct = sys.C(v.letter(t));
  Vector y = ct * (word_matrix_product(sys.transitions(), v.sub_word(0, t - 1)) * x);
  for (int j = 0; j < t; ++j)
    y += ct * (word_matrix_product(sys.transitions(), v.sub_word(j + 1, t - 1)) *
               (sys.B(v.letter(j)) * w.input(j)));
  return y;
}

/// Largest deviation between the Markov parameters of two systems up to a
/// word length, computed from the matrix formulas, not from experiments.
inline double markov_formula_distance(const SwitchedLinearSystem& a,
                                      const SwitchedLinearSystem& b, int depth) {
  double distance = 0.0;
  for (const ModeWord& w : enumerate_words(a.mode_count(), depth)) {
    if (w.empty()) continue;
    const int t = w.size();
    const int q = w.letter(t - 1);
    const ModeWord v = w.sub_word(0, t - 2);
    const Matrix pa = word_matrix_product(a.transitions(), v);
    const Matrix pb = word_matrix_product(b.transitions(), v);
    distance = std::max(distance, (a.C(q) * pa * a.initial_state() -
                                   b.C(q) * pb * b.initial_state())
                                      .cwiseAbs()
                                      .maxCoeff());
    if (t < 2) continue;
    const int q0 = w.letter(0);
    const ModeWord mid = w.sub_word(1, t - 2);
    const Matrix ma = a.C(q) * word_matrix_product(a.transitions(), mid) * a.B(q0);
    const Matrix mb = b.C(q) * word_matrix_product(b.transitions(), mid) * b.B(q0);
    distance = std::max(distance, (ma - mb).cwiseAbs().maxCoeff());
  }
  return distance;
}

/// Largest series deviation between two representations up to a word length.
inline double series_distance(const RationalRepresentation& a,
                              const RationalRepresentation& b, int depth) {
  double distance = 0.0;
  for (const ModeWord& w : enumerate_words(a.alphabet_size(), depth))
    for (int j = 0; j < a.index_count(); ++j)
      distance = std::max(
          distance, (a.series(w, j) - b.series(w, j)).cwiseAbs().maxCoeff());
  return distance;
}

/// Reachability reduction by explicit basis change: rotate an orthonormal
/// basis aligned with the reachability span to the front, check the claimed
/// zero blocks, keep the leading block.
inline SwitchedLinearSystem direct_reach_reduce(const SwitchedLinearSystem& sys,
                                                double rank_tol = kDefaultRankTol) {
  const Matrix v = image_basis(reach_matrix(sys), rank_tol);
  const Matrix v_perp = orth_complement(v, rank_tol);
  const int nr = static_cast<int>(v.cols());
  Matrix t(sys.state_dim(), sys.state_dim());
  t.leftCols(nr) = v;
  t.rightCols(v_perp.cols()) = v_perp;
  std::vector<Matrix> a, b, c;
  for (int q = 1; q <= sys.mode_count(); ++q) {
    const Matrix aq = t.transpose() * sys.A(q) * t;
    a.push_back(aq.topLeftCorner(nr, nr));
    const Matrix bq = t.transpose() * sys.B(q);
    b.push_back(bq.topRows(nr));
    const Matrix cq = sys.C(q) * t;
    c.push_back(cq.leftCols(nr));
  }
  const Vector x0 = t.transpose() * sys.initial_state();
  return SwitchedLinearSystem(a, b, c, x0.head(nr));
}

/// Observability reduction by explicit basis change; the trailing block is
/// the kernel of the observability matrix.
inline SwitchedLinearSystem direct_obs_reduce(const SwitchedLinearSystem& sys,
                                              double rank_tol = kDefaultRankTol) {
  const Matrix kernel = kernel_basis(obs_matrix(sys), rank_tol);
  const Matrix front = orth_complement(kernel, rank_tol);
  const int no = static_cast<int>(front.cols());
  Matrix t(sys.state_dim(), sys.state_dim());
  t.leftCols(no) = front;
  t.rightCols(kernel.cols()) = kernel;
  std::vector<Matrix> a, b, c;
  for (int q = 1; q <= sys.mode_count(); ++q) {
    const Matrix aq = t.transpose() * sys.A(q) * t;
    a.push_back(aq.topLeftCorner(no, no));
    const Matrix bq = t.transpose() * sys.B(q);
    b.push_back(bq.topRows(no));
    const Matrix cq = sys.C(q) * t;
    c.push_back(cq.leftCols(no));
  }
  const Vector x0 = t.transpose() * sys.initial_state();
  return SwitchedLinearSystem(a, b, c, x0.head(no));
}

}  // namespace lsr::test
