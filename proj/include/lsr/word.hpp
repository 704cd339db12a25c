#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lsr/common.hpp"

namespace lsr {

/// A finite sequence of discrete modes. Letters are 1-based: mode q lies in
/// {1..D}, where D is supplied by whatever object the word is applied to.
/// The empty word is a valid value.
class ModeWord {
 public:
  ModeWord() = default;
  ModeWord(std::initializer_list<int> letters) : letters_(letters) {}
  explicit ModeWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  /// Parses a digit string such as "212"; "-" denotes the empty word.
  /// Only alphabets with D <= 9 have such a textual form.
  static ModeWord parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter at 0-based position pos (the value is a 1-based mode).
  int letter(int pos) const;

  const std::vector<int>& letters() const { return letters_; }

  /// Letters at positions j..k inclusive (0-based); the empty word when
  /// j > k, the single letter at j when j == k.
  ModeWord sub_word(int j, int k) const;

  ModeWord append(int mode) const;
  ModeWord prepend(int mode) const;

  std::string str() const;

  friend ModeWord operator+(const ModeWord& a, const ModeWord& b);
  bool operator==(const ModeWord&) const = default;

 private:
  std::vector<int> letters_;
};

/// Length-first ordering: shorter words come first, equal lengths compare
/// letter-wise by integer value.
bool word_less(const ModeWord& a, const ModeWord& b);

bool valid_word(const ModeWord& w, int mode_count);
void require_valid_word(const ModeWord& w, int mode_count);

/// Number of words of length <= max_len over an alphabet of mode_count
/// letters. Throws CapacityError when the count does not fit in 64 bits.
std::int64_t word_count(int mode_count, int max_len);

/// All words of length <= max_len in length-first order, starting with the
/// empty word.
std::vector<ModeWord> enumerate_words(int mode_count, int max_len);

/// 0-based position of w in the length-first enumeration.
std::int64_t word_rank(const ModeWord& w, int mode_count);

/// Inverse of word_rank.
ModeWord word_at(std::int64_t rank, int mode_count);

/// A mode word paired with one continuous input vector per step. Except for
/// the default-constructed empty sequence, modes and inputs have identical,
/// strictly positive length and all inputs share one dimension.
class HybridWord {
 public:
  HybridWord() = default;
  HybridWord(ModeWord modes, std::vector<Vector> inputs);

  static HybridWord zero_inputs(ModeWord modes, int input_dim);

  int size() const { return modes_.size(); }
  bool empty() const { return modes_.empty(); }
  const ModeWord& modes() const { return modes_; }
  int mode(int pos) const { return modes_.letter(pos); }
  const Vector& input(int pos) const;
  const std::vector<Vector>& inputs() const { return inputs_; }

  /// Dimension of the input vectors; 0 for the empty sequence.
  int input_dim() const;

  /// Replaces the input at one step, leaving the rest untouched.
  HybridWord with_input(int pos, Vector value) const;

  friend HybridWord operator+(const HybridWord& a, const HybridWord& b);

 private:
  ModeWord modes_;
  std::vector<Vector> inputs_;
};

}  // namespace lsr
