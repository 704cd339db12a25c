#include "lsr/lss.hpp"

#include <algorithm>
#include <utility>

namespace lsr {

namespace {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

SwitchedLinearSystem::SwitchedLinearSystem(std::vector<Matrix> A,
                                           std::vector<Matrix> B,
                                           std::vector<Matrix> C, Vector x0)
    : a_(std::move(A)), b_(std::move(B)), c_(std::move(C)), x0_(std::move(x0)) {
  if (a_.empty()) throw DimensionError("system needs at least one mode");
  if (b_.size() != a_.size() || c_.size() != a_.size())
    throw DimensionError("A, B, C must all be given for every mode");
  const auto n = x0_.size();
  input_dim_ = static_cast<int>(b_.front().cols());
  output_dim_ = static_cast<int>(c_.front().rows());
  if (input_dim_ < 1) throw DimensionError("input dimension m must be >= 1");
  if (output_dim_ < 1) throw DimensionError("output dimension p must be >= 1");
  for (std::size_t q = 0; q < a_.size(); ++q) {
    const std::string tag = " in mode " + std::to_string(q + 1);
    if (a_[q].rows() != n || a_[q].cols() != n)
      throw DimensionError("A is not n x n" + tag);
    if (b_[q].rows() != n || b_[q].cols() != input_dim_)
      throw DimensionError("B is not n x m" + tag);
    if (c_[q].rows() != output_dim_ || c_[q].cols() != n)
      throw DimensionError("C is not p x n" + tag);
  }
}

std::size_t SwitchedLinearSystem::mode_index(int q) const {
  if (q < 1 || q > mode_count())
    throw ModeError("mode " + std::to_string(q) + " outside 1.." +
                    std::to_string(mode_count()));
  return static_cast<std::size_t>(q - 1);
}

Matrix word_matrix_product(const std::vector<Matrix>& by_mode, const ModeWord& w) {
  if (by_mode.empty()) throw ModeError("empty matrix family");
  const auto n = by_mode.front().rows();
  require_valid_word(w, static_cast<int>(by_mode.size()));
  Matrix product = Matrix::Identity(n, n);
  // A_w = A_{last} ... A_{first}: left-multiply as the letters are consumed.
  for (int q : w.letters()) product = by_mode[static_cast<std::size_t>(q - 1)] * product;
  return product;
}

Vector simulate_state(const SwitchedLinearSystem& sys, const Vector& x_init,
                      const HybridWord& w) {
  if (x_init.size() != sys.state_dim())
    throw DimensionError("initial state has dimension " +
                         std::to_string(x_init.size()) + ", expected " +
                         std::to_string(sys.state_dim()));
  if (!w.empty() && w.input_dim() != sys.input_dim())
    throw DimensionError("inputs have dimension " + std::to_string(w.input_dim()) +
                         ", expected " + std::to_string(sys.input_dim()));
  require_valid_word(w.modes(), sys.mode_count());
  Vector x = x_init;
  for (int t = 0; t < w.size(); ++t) {
    const int q = w.mode(t);
    x = sys.A(q) * x + sys.B(q) * w.input(t);
  }
  return x;
}

Vector simulate_output(const SwitchedLinearSystem& sys, const Vector& x_init,
                       const HybridWord& w) {
  if (w.empty()) throw Error("output is undefined on the empty word");
  if (x_init.size() != sys.state_dim())
    throw DimensionError("initial state has dimension " +
                         std::to_string(x_init.size()) + ", expected " +
                         std::to_string(sys.state_dim()));
  if (w.input_dim() != sys.input_dim())
    throw DimensionError("inputs have dimension " + std::to_string(w.input_dim()) +
                         ", expected " + std::to_string(sys.input_dim()));
  require_valid_word(w.modes(), sys.mode_count());
  // y at the last step reads the state reached by all but the last input.
  Vector x = x_init;
  for (int t = 0; t + 1 < w.size(); ++t) {
    const int q = w.mode(t);
    x = sys.A(q) * x + sys.B(q) * w.input(t);
  }
  return sys.C(w.mode(w.size() - 1)) * x;
}

std::vector<Vector> simulate_trajectory(const SwitchedLinearSystem& sys,
                                        const Vector& x_init, const HybridWord& w) {
  if (w.empty()) throw Error("output is undefined on the empty word");
  if (x_init.size() != sys.state_dim())
    throw DimensionError("initial state has dimension " +
                         std::to_string(x_init.size()) + ", expected " +
                         std::to_string(sys.state_dim()));
  if (w.input_dim() != sys.input_dim())
    throw DimensionError("inputs have dimension " + std::to_string(w.input_dim()) +
                         ", expected " + std::to_string(sys.input_dim()));
  require_valid_word(w.modes(), sys.mode_count());
  std::vector<Vector> outputs;
  outputs.reserve(static_cast<std::size_t>(w.size()));
  Vector x = x_init;
  for (int t = 0; t < w.size(); ++t) {
    const int q = w.mode(t);
    outputs.push_back(sys.C(q) * x);
    x = sys.A(q) * x + sys.B(q) * w.input(t);
  }
  return outputs;
}

IoOracle io_map(const SwitchedLinearSystem& sys) {
  return IoOracle(sys.mode_count(), sys.input_dim(), sys.output_dim(),
                  [sys](const HybridWord& w) {
                    return simulate_output(sys, sys.initial_state(), w);
                  });
}

MorphismReport check_morphism(const SwitchedLinearSystem& source,
                              const SwitchedLinearSystem& target, const Matrix& T,
                              double tol) {
  if (source.mode_count() != target.mode_count() ||
      source.input_dim() != target.input_dim() ||
      source.output_dim() != target.output_dim())
    throw DimensionError("morphism check needs matching D, m and p");
  if (T.rows() != target.state_dim() || T.cols() != source.state_dim())
    throw DimensionError("morphism matrix must be " +
                         std::to_string(target.state_dim()) + " x " +
                         std::to_string(source.state_dim()));

  MorphismReport report;
  report.tol = tol;
  report.initial_state_residual =
      max_abs(T * source.initial_state() - target.initial_state());
  report.max_residual = report.initial_state_residual;
  for (int q = 1; q <= source.mode_count(); ++q) {
    const double ra = max_abs(target.A(q) * T - T * source.A(q));
    const double rb = max_abs(target.B(q) - T * source.B(q));
    const double rc = max_abs(target.C(q) * T - source.C(q));
    report.transition_residuals.push_back(ra);
    report.input_residuals.push_back(rb);
    report.output_residuals.push_back(rc);
    report.max_residual = std::max({report.max_residual, ra, rb, rc});
  }
  report.ok = report.max_residual <= tol;
  return report;
}

}  // namespace lsr
