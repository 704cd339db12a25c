#pragma once

#include <vector>

#include "lsr/common.hpp"
#include "lsr/lss.hpp"
#include "lsr/rational.hpp"

namespace lsr::testing {

/// Brute-force references for the property-test suites. Everything here
/// enumerates instead of factorizing, so it stays independent of the
/// rank-based production paths it cross-checks. Desk scale only.

/// Orthonormal span of every state reachable within the given depth, found
/// by enumerating all hybrid words with per-step inputs from {0, e_1..e_m}.
/// That grid spans all reachable states because the state is affine in each
/// input. Throws CapacityError past max_states.
Subspace brute_reach_span(const SwitchedLinearSystem& sys, int depth,
                          double rank_tol = kDefaultRankTol,
                          std::int64_t max_states = 200000);

/// True when some mode word up to the given depth separates the outputs from
/// x1 and x2. Zero inputs suffice: the output difference does not depend on
/// the inputs.
bool brute_distinguish(const SwitchedLinearSystem& sys, const Vector& x1,
                       const Vector& x2, int depth, double tol = 1e-9);

struct IoEquivReport {
  bool ok = false;
  double max_residual = 0.0;
  std::int64_t experiments = 0;
};

/// Exhaustive output comparison over all mode words up to depth, feeding each
/// vector of constant_inputs as a constant input signal.
IoEquivReport io_equiv(const SwitchedLinearSystem& a,
                       const SwitchedLinearSystem& b, int depth,
                       const std::vector<Vector>& constant_inputs,
                       double tol = 1e-9, std::int64_t max_experiments = 200000);

/// Output comparison over all mode words up to depth with the zero signal
/// and every single-step unit impulse. Complete for maps that are affine in
/// each input, which covers everything a switched linear system generates.
IoEquivReport io_equiv_impulse(const SwitchedLinearSystem& a,
                               const SwitchedLinearSystem& b, int depth,
                               double tol = 1e-9,
                               std::int64_t max_experiments = 200000);

struct LinearSystem {
  Matrix A;
  Matrix B;
  Matrix C;
  Vector x0;
};

/// Classical single-matrix realization from the Markov sequence
/// M_t = [K_t H_t]: builds the block Hankel matrix H_{i,j} = M_{i+j-2},
/// checks that the rank has stabilized at the dimension bound, and reads the
/// system off a column-space basis (x0 from the first column, B from the
/// next input_dim columns, C from the first output rows, A as the one-block
/// column shift). Cross-validates the single-mode specialization of the
/// general pipeline.
LinearSystem linear_ho_kalman(const std::vector<Matrix>& markov_sequence,
                              int dim_bound, int input_dim,
                              double rank_tol = kDefaultRankTol);

}  // namespace lsr::testing
