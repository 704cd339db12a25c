#pragma once

#include <cstdint>

#include "lsr/common.hpp"
#include "lsr/markov.hpp"
#include "lsr/numerics.hpp"
#include "lsr/word.hpp"

namespace lsr {

/// Row label of the Hankel matrix: a word v and an offset i in 1..pD.
/// Decomposing i = p*K + l with l in 1..p identifies the suffix mode K+1 and
/// the output coordinate l: the entry in that row is coordinate l of a
/// parameter whose word ends in mode K+1.
struct HankelRowLabel {
  ModeWord word;
  int offset = 1;

  int suffix_mode(int output_dim) const { return (offset - 1) / output_dim + 1; }
  int coordinate(int output_dim) const { return (offset - 1) % output_dim + 1; }
};

/// Column label: a word w and an index j drawn from {0} u {(q,z)}; j = 0 is
/// the zero-input column, (q,z) the column for an impulse in channel z
/// entering under prefix mode q.
struct HankelColumnLabel {
  ModeWord word;
  bool initial = true;  // true: j = 0
  int prefix_mode = 0;  // q, when !initial
  int channel = 0;      // z, when !initial
};

/// Finite sub-matrix of the block Hankel matrix of an input-output map: the
/// block at block-row r, block-column c is the combined Markov parameter of
/// the word v_c . v_r, where v_1, v_2, ... enumerates words length-first.
/// Rows cover words up to row_depth, columns words up to col_depth, so the
/// matrix is N(row_depth)*p*D by N(col_depth)*(m*D+1) and nests: a deeper
/// matrix contains the shallower one as its upper-left corner.
class HankelBlockMatrix {
 public:
  HankelBlockMatrix(Matrix h, int mode_count, int input_dim, int output_dim,
                    int row_depth, int col_depth);

  const Matrix& matrix() const { return h_; }
  int mode_count() const { return mode_count_; }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }
  int row_depth() const { return row_depth_; }
  int col_depth() const { return col_depth_; }

  Eigen::Index rows() const { return h_.rows(); }
  Eigen::Index cols() const { return h_.cols(); }
  std::int64_t block_rows() const { return block_rows_; }
  std::int64_t block_cols() const { return block_cols_; }
  int block_height() const { return output_dim_ * mode_count_; }
  int block_width() const { return input_dim_ * mode_count_ + 1; }

  /// Combined-Markov block at 0-based block position (r, c).
  Matrix block(std::int64_t r, std::int64_t c) const;

  /// Label of a 0-based flat row / column index.
  HankelRowLabel row_label(Eigen::Index row) const;
  HankelColumnLabel col_label(Eigen::Index col) const;

  /// Flat 0-based index of a label; the word must lie within the depth.
  Eigen::Index row_index(const HankelRowLabel& label) const;
  Eigen::Index col_index(const HankelColumnLabel& label) const;

 private:
  Matrix h_;
  int mode_count_;
  int input_dim_;
  int output_dim_;
  int row_depth_;
  int col_depth_;
  std::int64_t block_rows_;
  std::int64_t block_cols_;
};

/// Assembles the sub-Hankel matrix with the given depths from a Markov
/// family, which must cover words of length row_depth + col_depth + 2.
/// Refuses to allocate more than max_entries entries.
HankelBlockMatrix build_hankel(const MarkovFamily& family, int row_depth,
                               int col_depth,
                               std::int64_t max_entries = kDefaultEntryCap);

/// Numerical rank of the Hankel matrix together with its full spectrum.
RankDecision hankel_rank(const HankelBlockMatrix& h,
                         double rank_tol = kDefaultRankTol);

}  // namespace lsr
