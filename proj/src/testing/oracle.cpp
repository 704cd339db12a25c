#include "lsr/testing/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lsr/numerics.hpp"

namespace lsr::testing {

namespace {

std::vector<Vector> input_grid(int input_dim) {
  std::vector<Vector> grid;
  grid.push_back(Vector::Zero(input_dim));
  for (int j = 0; j < input_dim; ++j) {
    Vector e = Vector::Zero(input_dim);
    e(j) = 1.0;
    grid.push_back(e);
  }
  return grid;
}

}  // namespace

Subspace brute_reach_span(const SwitchedLinearSystem& sys, int depth,
                          double rank_tol, std::int64_t max_states) {
  const int n = sys.state_dim();
  const std::vector<Vector> grid = input_grid(sys.input_dim());
  std::vector<Vector> frontier{sys.initial_state()};
  std::vector<Vector> all = frontier;
  for (int level = 0; level < depth; ++level) {
    std::vector<Vector> next;
    next.reserve(frontier.size() * grid.size() *
                 static_cast<std::size_t>(sys.mode_count()));
    for (const Vector& x : frontier)
      for (int q = 1; q <= sys.mode_count(); ++q)
        for (const Vector& u : grid) next.push_back(sys.A(q) * x + sys.B(q) * u);
    if (static_cast<std::int64_t>(all.size() + next.size()) > max_states)
      throw CapacityError("state enumeration exceeds " +
                          std::to_string(max_states) + " states");
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  Matrix stacked(n, static_cast<Eigen::Index>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    stacked.col(static_cast<Eigen::Index>(i)) = all[i];
  return Subspace{image_basis(stacked, rank_tol)};
}

bool brute_distinguish(const SwitchedLinearSystem& sys, const Vector& x1,
                       const Vector& x2, int depth, double tol) {
  for (const ModeWord& v : enumerate_words(sys.mode_count(), depth)) {
    if (v.empty()) continue;
    const HybridWord w = HybridWord::zero_inputs(v, sys.input_dim());
    const Vector diff = simulate_output(sys, x1, w) - simulate_output(sys, x2, w);
    if (diff.cwiseAbs().maxCoeff() > tol) return true;
  }
  return false;
}

IoEquivReport io_equiv(const SwitchedLinearSystem& a,
                       const SwitchedLinearSystem& b, int depth,
                       const std::vector<Vector>& constant_inputs, double tol,
                       std::int64_t max_experiments) {
  if (a.mode_count() != b.mode_count() || a.input_dim() != b.input_dim() ||
      a.output_dim() != b.output_dim())
    throw DimensionError("io comparison needs matching D, m and p");
  IoEquivReport report;
  for (const ModeWord& v : enumerate_words(a.mode_count(), depth)) {
    if (v.empty()) continue;
    for (const Vector& u : constant_inputs) {
      if (u.size() != a.input_dim())
        throw DimensionError("constant input has wrong dimension");
      if (report.experiments >= max_experiments)
        throw CapacityError("io comparison exceeds " +
                            std::to_string(max_experiments) + " experiments");
      const HybridWord w(v, std::vector<Vector>(static_cast<std::size_t>(v.size()), u));
      const double r = (simulate_output(a, a.initial_state(), w) -
                        simulate_output(b, b.initial_state(), w))
                           .cwiseAbs()
                           .maxCoeff();
      report.max_residual = std::max(report.max_residual, r);
      ++report.experiments;
    }
  }
  report.ok = report.max_residual <= tol;
  return report;
}

IoEquivReport io_equiv_impulse(const SwitchedLinearSystem& a,
                               const SwitchedLinearSystem& b, int depth,
                               double tol, std::int64_t max_experiments) {
  if (a.mode_count() != b.mode_count() || a.input_dim() != b.input_dim() ||
      a.output_dim() != b.output_dim())
    throw DimensionError("io comparison needs matching D, m and p");
  IoEquivReport report;
  const int m = a.input_dim();
  auto probe = [&](const HybridWord& w) {
    if (report.experiments >= max_experiments)
      throw CapacityError("io comparison exceeds " +
                          std::to_string(max_experiments) + " experiments");
    const double r = (simulate_output(a, a.initial_state(), w) -
                      simulate_output(b, b.initial_state(), w))
                         .cwiseAbs()
                         .maxCoeff();
    report.max_residual = std::max(report.max_residual, r);
    ++report.experiments;
  };
  for (const ModeWord& v : enumerate_words(a.mode_count(), depth)) {
    if (v.empty()) continue;
    const HybridWord zero = HybridWord::zero_inputs(v, m);
    probe(zero);
    for (int k = 0; k < v.size(); ++k) {
      for (int j = 0; j < m; ++j) {
        Vector impulse = Vector::Zero(m);
        impulse(j) = 1.0;
        probe(zero.with_input(k, impulse));
      }
    }
  }
  report.ok = report.max_residual <= tol;
  return report;
}

LinearSystem linear_ho_kalman(const std::vector<Matrix>& markov_sequence,
                              int dim_bound, int input_dim, double rank_tol) {
  if (dim_bound < 0) throw Error("dimension bound must be non-negative");
  const int needed = 2 * dim_bound + 1;
  if (static_cast<int>(markov_sequence.size()) < needed)
    throw Error("need " + std::to_string(needed) + " markov blocks, have " +
                std::to_string(markov_sequence.size()));
  const int p = static_cast<int>(markov_sequence.front().rows());
  const int width = input_dim + 1;  // [K_t H_t]
  for (const Matrix& blk : markov_sequence)
    if (blk.rows() != p || blk.cols() != width)
      throw DimensionError("markov blocks must all be p x (1+m)");

  // H has dim_bound+1 block rows; dim_bound block columns suffice for the
  // shifted copy to stay inside the sequence.
  const int rows = dim_bound + 1;
  const int cols = dim_bound + 1;
  Matrix h(rows * p, cols * width);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      h.block(i * p, j * width, p, width) =
          markov_sequence[static_cast<std::size_t>(i + j)];

  // Rank must have stabilized one block earlier, otherwise the data admits
  // no realization within the bound.
  const int full = numerical_rank(h, rank_tol);
  const int shallow =
      numerical_rank(h.topLeftCorner((rows - 1) * p, (cols - 1) * width), rank_tol);
  if (dim_bound > 0 && full != shallow)
    throw Error("hankel rank has not stabilized at the dimension bound");

  const RankFactorization fac = rank_factorize(h, rank_tol);
  const int n = fac.rank;
  const Matrix& coords = fac.right;
  LinearSystem sys;
  sys.x0 = coords.col(0);
  sys.B = coords.middleCols(1, input_dim);
  sys.C = fac.left.topRows(p);
  const Eigen::Index keep = static_cast<Eigen::Index>(cols - 1) * width;
  sys.A = coords.middleCols(width, keep) *
          pseudoinverse(coords.leftCols(keep), rank_tol);
  if (n == 0) {
    sys.A = Matrix(0, 0);
    sys.B = Matrix(0, input_dim);
    sys.C = Matrix(p, 0);
    sys.x0 = Vector(0);
  }
  return sys;
}

}  // namespace lsr::testing
