#pragma once

#include <vector>

#include "lsr/common.hpp"
#include "lsr/io_oracle.hpp"
#include "lsr/word.hpp"

namespace lsr {

/// A discrete-time linear switched system
///
///   x_{t+1} = A_{q_t} x_t + B_{q_t} u_t,   y_t = C_{q_t} x_t,
///
/// with D modes sharing one state space, a fixed initial state x0, inputs in
/// R^m and outputs in R^p. State dimension 0 is allowed and realizes the
/// identically-zero map. Instances are immutable after construction.
class SwitchedLinearSystem {
 public:
  SwitchedLinearSystem(std::vector<Matrix> A, std::vector<Matrix> B,
                       std::vector<Matrix> C, Vector x0);

  int mode_count() const { return static_cast<int>(a_.size()); }
  int state_dim() const { return static_cast<int>(x0_.size()); }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }

  /// Per-mode matrices; q is 1-based.
  const Matrix& A(int q) const { return a_[mode_index(q)]; }
  const Matrix& B(int q) const { return b_[mode_index(q)]; }
  const Matrix& C(int q) const { return c_[mode_index(q)]; }

  const std::vector<Matrix>& transitions() const { return a_; }
  const Vector& initial_state() const { return x0_; }

 private:
  std::size_t mode_index(int q) const;

  std::vector<Matrix> a_, b_, c_;
  Vector x0_;
  int input_dim_ = 0;
  int output_dim_ = 0;
};

/// Product of the per-letter matrices along w, with the last letter's matrix
/// applied last (leftmost factor); the empty word gives the identity.
Matrix word_matrix_product(const std::vector<Matrix>& by_mode, const ModeWord& w);

/// State after feeding w from x_init; x_init itself for the empty word.
Vector simulate_state(const SwitchedLinearSystem& sys, const Vector& x_init,
                      const HybridWord& w);

/// Output at the last step of w (w must be non-empty).
Vector simulate_output(const SwitchedLinearSystem& sys, const Vector& x_init,
                       const HybridWord& w);

/// Outputs at every step 0..t of w.
std::vector<Vector> simulate_trajectory(const SwitchedLinearSystem& sys,
                                        const Vector& x_init, const HybridWord& w);

/// The input-output map w -> y(x0, w) of the system, as an oracle.
IoOracle io_map(const SwitchedLinearSystem& sys);

struct MorphismReport {
  bool ok = false;
  double max_residual = 0.0;
  double tol = 0.0;
  double initial_state_residual = 0.0;
  std::vector<double> transition_residuals;  // per mode: |A2_q T - T A1_q|_max
  std::vector<double> input_residuals;       // per mode: |B2_q - T B1_q|_max
  std::vector<double> output_residuals;      // per mode: |C2_q T - C1_q|_max
};

/// Checks whether T is a system morphism from source to target, i.e.
/// T x0 = x0', A'_q T = T A_q, B'_q = T B_q and C'_q T = C_q for every mode,
/// all within tol in max norm.
MorphismReport check_morphism(const SwitchedLinearSystem& source,
                              const SwitchedLinearSystem& target, const Matrix& T,
                              double tol = kDefaultMorphismTol);

}  // namespace lsr
