#include "lsr/hankel.hpp"

#include <string>
#include <vector>

namespace lsr {

HankelBlockMatrix::HankelBlockMatrix(Matrix h, int mode_count, int input_dim,
                                     int output_dim, int row_depth, int col_depth)
    : h_(std::move(h)),
      mode_count_(mode_count),
      input_dim_(input_dim),
      output_dim_(output_dim),
      row_depth_(row_depth),
      col_depth_(col_depth),
      block_rows_(word_count(mode_count, row_depth)),
      block_cols_(word_count(mode_count, col_depth)) {
  if (row_depth_ < 0 || col_depth_ < 0)
    throw DimensionError("hankel depths must be non-negative");
  if (h_.rows() != block_rows_ * block_height() ||
      h_.cols() != block_cols_ * block_width())
    throw DimensionError(
        "hankel matrix is " + std::to_string(h_.rows()) + " x " +
        std::to_string(h_.cols()) + ", expected " +
        std::to_string(block_rows_ * block_height()) + " x " +
        std::to_string(block_cols_ * block_width()));
}

Matrix HankelBlockMatrix::block(std::int64_t r, std::int64_t c) const {
  if (r < 0 || r >= block_rows_ || c < 0 || c >= block_cols_)
    throw Error("hankel block (" + std::to_string(r) + "," + std::to_string(c) +
                ") out of range");
  return h_.block(r * block_height(), c * block_width(), block_height(),
                  block_width());
}

HankelRowLabel HankelBlockMatrix::row_label(Eigen::Index row) const {
  if (row < 0 || row >= rows())
    throw Error("hankel row " + std::to_string(row) + " out of range");
  HankelRowLabel label;
  label.word = word_at(row / block_height(), mode_count_);
  label.offset = static_cast<int>(row % block_height()) + 1;
  return label;
}

HankelColumnLabel HankelBlockMatrix::col_label(Eigen::Index col) const {
  if (col < 0 || col >= cols())
    throw Error("hankel column " + std::to_string(col) + " out of range");
  HankelColumnLabel label;
  label.word = word_at(col / block_width(), mode_count_);
  const int i = static_cast<int>(col % block_width());
  if (i == 0) return label;
  label.initial = false;
  label.prefix_mode = (i - 1) / input_dim_ + 1;
  label.channel = (i - 1) % input_dim_ + 1;
  return label;
}

Eigen::Index HankelBlockMatrix::row_index(const HankelRowLabel& label) const {
  if (label.word.size() > row_depth_)
    throw DepthError("row word " + label.word.str() + " exceeds depth " +
                     std::to_string(row_depth_));
  if (label.offset < 1 || label.offset > block_height())
    throw Error("row offset " + std::to_string(label.offset) + " outside 1.." +
                std::to_string(block_height()));
  return word_rank(label.word, mode_count_) * block_height() + label.offset - 1;
}

Eigen::Index HankelBlockMatrix::col_index(const HankelColumnLabel& label) const {
  if (label.word.size() > col_depth_)
    throw DepthError("column word " + label.word.str() + " exceeds depth " +
                     std::to_string(col_depth_));
  Eigen::Index base = word_rank(label.word, mode_count_) * block_width();
  if (label.initial) return base;
  if (label.prefix_mode < 1 || label.prefix_mode > mode_count_)
    throw ModeError("column prefix mode " + std::to_string(label.prefix_mode) +
                    " outside 1.." + std::to_string(mode_count_));
  if (label.channel < 1 || label.channel > input_dim_)
    throw Error("column channel " + std::to_string(label.channel) +
                " outside 1.." + std::to_string(input_dim_));
  return base + 1 + (label.prefix_mode - 1) * input_dim_ + label.channel - 1;
}

HankelBlockMatrix build_hankel(const MarkovFamily& family, int row_depth,
                               int col_depth, std::int64_t max_entries) {
  if (row_depth < 0 || col_depth < 0)
    throw DimensionError("hankel depths must be non-negative");
  if (family.depth() != MarkovFamily::kUnboundedDepth &&
      row_depth + col_depth + 2 > family.depth())
    throw DepthError("hankel with depths (" + std::to_string(row_depth) + "," +
                     std::to_string(col_depth) + ") needs markov depth " +
                     std::to_string(row_depth + col_depth + 2) + ", have " +
                     std::to_string(family.depth()));

  const int d = family.mode_count();
  const int height = family.output_dim() * d;
  const int width = family.input_dim() * d + 1;
  const std::int64_t block_rows = word_count(d, row_depth);
  const std::int64_t block_cols = word_count(d, col_depth);
  const std::int64_t entries = block_rows * height * block_cols * width;
  if (entries > max_entries)
    throw CapacityError("hankel matrix would hold " + std::to_string(entries) +
                        " entries, above the cap of " + std::to_string(max_entries) +
                        "; lower the depths or raise the cap");

  const std::vector<ModeWord> row_words = enumerate_words(d, row_depth);
  const std::vector<ModeWord> col_words = enumerate_words(d, col_depth);
  Matrix h(block_rows * height, block_cols * width);
  for (std::int64_t c = 0; c < block_cols; ++c) {
    for (std::int64_t r = 0; r < block_rows; ++r) {
      // Block (r, c) carries the combined parameter of column word . row word.
      h.block(r * height, c * width, height, width) = combined_markov(
          family, col_words[static_cast<std::size_t>(c)] +
                      row_words[static_cast<std::size_t>(r)]);
    }
  }
  return HankelBlockMatrix(std::move(h), d, family.input_dim(),
                           family.output_dim(), row_depth, col_depth);
}

RankDecision hankel_rank(const HankelBlockMatrix& h, double rank_tol) {
  return rank_decision(h.matrix(), rank_tol);
}

}  // namespace lsr
