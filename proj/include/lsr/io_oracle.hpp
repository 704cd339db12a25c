#pragma once

#include <functional>
#include <utility>

#include "lsr/common.hpp"
#include "lsr/word.hpp"

namespace lsr {

/// A black-box input-output map: given a non-empty hybrid word it returns the
/// output at the last step. Whether the map admits a switched state-space
/// description is exactly what the realization machinery decides.
class IoOracle {
 public:
  IoOracle(int mode_count, int input_dim, int output_dim,
           std::function<Vector(const HybridWord&)> eval)
      : mode_count_(mode_count),
        input_dim_(input_dim),
        output_dim_(output_dim),
        eval_(std::move(eval)) {
    if (mode_count_ < 1 || input_dim_ < 1 || output_dim_ < 1)
      throw DimensionError("io oracle needs D >= 1, m >= 1, p >= 1");
  }

  int mode_count() const { return mode_count_; }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }

  Vector operator()(const HybridWord& w) const {
    if (w.empty()) throw Error("io oracle is undefined on the empty word");
    require_valid_word(w.modes(), mode_count_);
    if (w.input_dim() != input_dim_)
      throw DimensionError("io oracle expects inputs of dimension " +
                           std::to_string(input_dim_));
    Vector y = eval_(w);
    if (y.size() != output_dim_)
      throw DimensionError("io oracle returned an output of dimension " +
                           std::to_string(y.size()) + ", expected " +
                           std::to_string(output_dim_));
    return y;
  }

 private:
  int mode_count_;
  int input_dim_;
  int output_dim_;
  std::function<Vector(const HybridWord&)> eval_;
};

}  // namespace lsr
