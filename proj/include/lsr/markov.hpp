#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lsr/common.hpp"
#include "lsr/io_oracle.hpp"
#include "lsr/word.hpp"

namespace lsr {

/// The canonical fingerprint of an input-output map: the zero-input response
/// S0(w), defined on words of length >= 1, and the impulse-response block
/// S(w) = [S_1(w) ... S_m(w)], defined on words of length >= 2, where
/// S_j(w) is the response to a unit impulse in channel j at time 0 minus the
/// zero-input response.
///
/// A family is either backed by a finite table (every access past its depth
/// raises DepthError, never a silent zero) or by a generator with unbounded
/// depth.
class MarkovFamily {
 public:
  static constexpr int kUnboundedDepth = std::numeric_limits<int>::max();

  MarkovFamily(int mode_count, int input_dim, int output_dim, int depth,
               std::function<Vector(const ModeWord&)> zero_input_response,
               std::function<Matrix(const ModeWord&)> impulse_response);

  int mode_count() const { return mode_count_; }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }

  /// Longest word the family covers; kUnboundedDepth for generator-backed
  /// families.
  int depth() const { return depth_; }

  /// Zero-input response for a word of length >= 1.
  Vector S0(const ModeWord& w) const;

  /// Impulse-response block (p x m) for a word of length >= 2.
  Matrix S(const ModeWord& w) const;

  /// Column j (1-based input channel) of S(w).
  Vector Sj(int j, const ModeWord& w) const;

  /// S_j on the word prefix_mode . middle . suffix_mode.
  Vector Sj(int prefix_mode, const ModeWord& middle, int suffix_mode, int j) const;

 private:
  void check_word(const ModeWord& w, int min_len) const;

  int mode_count_;
  int input_dim_;
  int output_dim_;
  int depth_;
  std::function<Vector(const ModeWord&)> s0_;
  std::function<Matrix(const ModeWord&)> s_;
};

/// Reads the Markov parameters of f off input-output experiments: the
/// zero-input response gives S0, and the difference between a unit-impulse
/// experiment and the zero-input experiment gives each column of S. Covers
/// every word up to the requested depth and returns a table-backed family.
MarkovFamily extract_markov(const IoOracle& f, int depth);

/// Value of the generalized convolution representation at w:
/// the zero-input term for w's mode word plus one impulse-response term per
/// input. Equals f(w) whenever the family was extracted from a map that has
/// such a representation.
Vector gcr_evaluate(const MarkovFamily& family, const HybridWord& w);

struct GcrReport {
  bool ok = false;
  double max_residual = 0.0;
  double tol = 0.0;
  std::int64_t experiments = 0;
};

/// Compares f against the convolution representation built from family on
/// every mode word up to depth crossed with per-step inputs drawn from
/// step_inputs (defaults to {0, e_1..e_m, 2 e_1}), truncated to at most
/// max_experiments evaluations. A finite necessary check: it can falsify a
/// convolution representation, not certify one.
GcrReport check_gcr(const IoOracle& f, const MarkovFamily& family, int depth,
                    std::vector<Vector> step_inputs = {},
                    double tol = kDefaultGcrTol,
                    std::int64_t max_experiments = 10000);

/// The pD x (mD+1) block whose row-block q holds
/// [S0(v q), S(1 v q), ..., S(D v q)]; the entry of the Hankel matrix.
Matrix combined_markov(const MarkovFamily& family, const ModeWord& v);

}  // namespace lsr
