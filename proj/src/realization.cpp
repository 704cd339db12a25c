#include "lsr/realization.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lsr/bridge.hpp"
#include "lsr/rational.hpp"

namespace lsr {

Matrix reach_matrix(const SwitchedLinearSystem& sys) {
  const int n = sys.state_dim();
  const int d = sys.mode_count();
  const int m = sys.input_dim();
  Matrix gen(n, d * m + 1);
  gen.col(0) = sys.initial_state();
  for (int q = 1; q <= d; ++q) gen.middleCols(1 + (q - 1) * m, m) = sys.B(q);
  const std::vector<ModeWord> words = enumerate_words(d, n - 1);
  Matrix r(n, static_cast<Eigen::Index>(words.size()) * gen.cols());
  for (std::size_t i = 0; i < words.size(); ++i)
    r.middleCols(static_cast<Eigen::Index>(i) * gen.cols(), gen.cols()) =
        word_matrix_product(sys.transitions(), words[i]) * gen;
  return r;
}

Matrix obs_matrix(const SwitchedLinearSystem& sys) {
  const int n = sys.state_dim();
  const int d = sys.mode_count();
  const int p = sys.output_dim();
  Matrix stacked(p * d, n);
  for (int q = 1; q <= d; ++q) stacked.middleRows((q - 1) * p, p) = sys.C(q);
  const std::vector<ModeWord> words = enumerate_words(d, n - 1);
  Matrix o(static_cast<Eigen::Index>(words.size()) * stacked.rows(), n);
  for (std::size_t i = 0; i < words.size(); ++i)
    o.middleRows(static_cast<Eigen::Index>(i) * stacked.rows(), stacked.rows()) =
        stacked * word_matrix_product(sys.transitions(), words[i]);
  return o;
}

RankDecision span_reachability_test(const SwitchedLinearSystem& sys,
                                    double rank_tol) {
  return rank_decision(reach_matrix(sys), rank_tol);
}

RankDecision observability_test(const SwitchedLinearSystem& sys, double rank_tol) {
  return rank_decision(obs_matrix(sys), rank_tol);
}

bool is_span_reachable(const SwitchedLinearSystem& sys, double rank_tol) {
  return span_reachability_test(sys, rank_tol).rank == sys.state_dim();
}

bool is_observable(const SwitchedLinearSystem& sys, double rank_tol) {
  return observability_test(sys, rank_tol).rank == sys.state_dim();
}

LssReduction reach_reduce_lss(const SwitchedLinearSystem& sys, double rank_tol) {
  ReducedRepresentation red = reach_reduce(repr_of_lss(sys), rank_tol);
  return LssReduction{lss_of_repr(red.repr), std::move(red.map)};
}

LssReduction obs_reduce_lss(const SwitchedLinearSystem& sys, double rank_tol) {
  ReducedRepresentation red = obs_reduce(repr_of_lss(sys), rank_tol);
  return LssReduction{lss_of_repr(red.repr), std::move(red.map)};
}

LssMinimization minimize_lss(const SwitchedLinearSystem& sys, double rank_tol) {
  ReducedRepresentation reach = reach_reduce(repr_of_lss(sys), rank_tol);
  ReducedRepresentation obs = obs_reduce(reach.repr, rank_tol);
  LssMinimization out{lss_of_repr(obs.repr), std::move(reach.map),
                      std::move(obs.map), Matrix()};
  out.projection = out.obs_map * out.reach_basis.transpose();
  return out;
}

SwitchedLinearSystem lss_from_hankel(const HankelBlockMatrix& h, double rank_tol,
                                     double shift_tol) {
  return lss_of_repr(repr_from_hankel(series_view(h), rank_tol, shift_tol));
}

RealizationReport algorithm_1(const HankelBlockMatrix& h, double rank_tol,
                              double validation_tol) {
  RealizationReport report{
      lss_of_repr(realization_algorithm(series_view(h), rank_tol)),
      hankel_rank(h, rank_tol), 0.0, validation_tol};

  // The stabilization hypothesis is unverifiable from finite data; checking
  // the reconstructed system against the input data at the same depths turns
  // it into a testable postcondition.
  const int depth = h.row_depth() + h.col_depth() + 2;
  const MarkovFamily extracted = extract_markov(io_map(report.system), depth);
  const HankelBlockMatrix rebuilt =
      build_hankel(extracted, h.row_depth(), h.col_depth());
  report.markov_residual =
      (rebuilt.matrix() - h.matrix()).cwiseAbs().maxCoeff();
  if (report.markov_residual > validation_tol)
    throw HypothesisError(
        "reconstructed system does not reproduce the hankel data (residual " +
            std::to_string(report.markov_residual) +
            "); the matrix is too shallow for the underlying map",
        report.markov_residual);
  return report;
}

LssIsomorphismResult lss_isomorphism(const SwitchedLinearSystem& a,
                                     const SwitchedLinearSystem& b, double tol,
                                     double rank_tol) {
  if (a.mode_count() != b.mode_count() || a.input_dim() != b.input_dim() ||
      a.output_dim() != b.output_dim())
    throw DimensionError("isomorphism needs matching D, m and p");
  const IsomorphismResult repr =
      repr_isomorphism(repr_of_lss(a), repr_of_lss(b), tol, rank_tol);
  LssIsomorphismResult out{repr.ok, repr.T, repr.max_residual, tol};
  if (!out.ok) return out;
  const MorphismReport morphism = check_morphism(a, b, out.T, tol);
  out.max_residual = std::max(out.max_residual, morphism.max_residual);
  out.ok = morphism.ok;
  return out;
}

}  // namespace lsr
