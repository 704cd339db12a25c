#pragma once

#include "lsr/common.hpp"
#include "lsr/hankel.hpp"
#include "lsr/lss.hpp"
#include "lsr/numerics.hpp"

namespace lsr {

/// Span-reachability matrix: blocks A_v [x0, B_1, ..., B_D] for all words v
/// of length < n, in length-first order. The system is span-reachable iff
/// the matrix has rank n.
Matrix reach_matrix(const SwitchedLinearSystem& sys);

/// Observability matrix: stacked blocks [C_1; ...; C_D] A_v over the same
/// words. The system is observable iff it has rank n.
Matrix obs_matrix(const SwitchedLinearSystem& sys);

RankDecision span_reachability_test(const SwitchedLinearSystem& sys,
                                    double rank_tol = kDefaultRankTol);
RankDecision observability_test(const SwitchedLinearSystem& sys,
                                double rank_tol = kDefaultRankTol);
bool is_span_reachable(const SwitchedLinearSystem& sys,
                       double rank_tol = kDefaultRankTol);
bool is_observable(const SwitchedLinearSystem& sys,
                   double rank_tol = kDefaultRankTol);

struct LssReduction {
  SwitchedLinearSystem system;
  /// Reachability reduction: an orthonormal basis (n x n_r) of the invariant
  /// reachability span; it is a morphism from the reduced into the original
  /// system. Observability reduction: an (n_o x n) projection which is a
  /// morphism from the original onto the reduced system.
  Matrix map;
};

/// Restriction to the reachability span; span-reachable, same input-output
/// map. Routed through the rational-representation engine.
LssReduction reach_reduce_lss(const SwitchedLinearSystem& sys,
                              double rank_tol = kDefaultRankTol);

/// Quotient by the unobservable subspace; observable, same input-output map,
/// and span-reachability is preserved.
LssReduction obs_reduce_lss(const SwitchedLinearSystem& sys,
                            double rank_tol = kDefaultRankTol);

struct LssMinimization {
  SwitchedLinearSystem system;
  /// Basis of the reachability span (n x n_r): a morphism from the
  /// intermediate span-reachable system into the original one.
  Matrix reach_basis;
  /// Quotient map (n_min x n_r): a morphism from the intermediate system
  /// onto the minimal one.
  Matrix obs_map;
  /// obs_map * reach_basis^T (n_min x n). A genuine morphism from the
  /// original to the minimal system whenever the original is span-reachable;
  /// in general only its restriction to the reachability span intertwines.
  Matrix projection;
};

/// Reachability reduction followed by observability reduction; the result is
/// a minimal realization of the system's input-output map.
LssMinimization minimize_lss(const SwitchedLinearSystem& sys,
                             double rank_tol = kDefaultRankTol);

/// Reads a minimal system off a finite Hankel matrix whose rank has
/// stabilized: the initial state and the B_q come from the empty-word
/// columns, the C_q from the empty-word rows, and each A_q shifts columns by
/// the letter q. Raises DepthError when the shifts are inconsistent.
SwitchedLinearSystem lss_from_hankel(const HankelBlockMatrix& h,
                                     double rank_tol = kDefaultRankTol,
                                     double shift_tol = 1e-6);

struct RealizationReport {
  SwitchedLinearSystem system;
  RankDecision rank;
  /// Largest deviation between the input Hankel data and the data the
  /// reconstructed system generates, at the same depths.
  double markov_residual = 0.0;
  double validation_tol = 0.0;
};

/// The SVD realization pass on a Hankel matrix with col_depth = row_depth+1.
/// The stabilization hypothesis cannot be verified from finite data, so
/// every run re-extracts the Markov parameters of the output system and
/// compares them against the input matrix; a residual above validation_tol
/// raises HypothesisError carrying that residual.
RealizationReport algorithm_1(const HankelBlockMatrix& h,
                              double rank_tol = kDefaultRankTol,
                              double validation_tol = 1e-8);

struct LssIsomorphismResult {
  bool ok = false;
  Matrix T;
  double max_residual = 0.0;
  double tol = 0.0;
};

/// Isomorphism between two minimal systems, recovered by aligning the
/// reachability columns of their associated representations and verified
/// against the morphism equations.
LssIsomorphismResult lss_isomorphism(const SwitchedLinearSystem& a,
                                     const SwitchedLinearSystem& b,
                                     double tol = kDefaultMorphismTol,
                                     double rank_tol = kDefaultRankTol);

}  // namespace lsr
