#include "lsr/word.hpp"

#include <algorithm>
#include <limits>

namespace lsr {

ModeWord ModeWord::parse(std::string_view text) {
  if (text == "-") return ModeWord{};
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9')
      throw SchemaError("mode word '" + std::string(text) +
                        "': expected digits 1..9 or '-'");
    letters.push_back(c - '0');
  }
  return ModeWord(std::move(letters));
}

int ModeWord::letter(int pos) const {
  if (pos < 0 || pos >= size())
    throw Error("mode word position " + std::to_string(pos) +
                " out of range for length " + std::to_string(size()));
  return letters_[static_cast<std::size_t>(pos)];
}

ModeWord ModeWord::sub_word(int j, int k) const {
  if (j > k) return ModeWord{};
  if (j < 0 || k >= size())
    throw Error("sub_word(" + std::to_string(j) + "," + std::to_string(k) +
                ") out of range for length " + std::to_string(size()));
  return ModeWord(std::vector<int>(letters_.begin() + j, letters_.begin() + k + 1));
}

ModeWord ModeWord::append(int mode) const {
  std::vector<int> letters = letters_;
  letters.push_back(mode);
  return ModeWord(std::move(letters));
}

ModeWord ModeWord::prepend(int mode) const {
  std::vector<int> letters;
  letters.reserve(letters_.size() + 1);
  letters.push_back(mode);
  letters.insert(letters.end(), letters_.begin(), letters_.end());
  return ModeWord(std::move(letters));
}

std::string ModeWord::str() const {
  if (empty()) return "-";
  std::string out;
  out.reserve(letters_.size());
  for (int q : letters_) {
    if (q < 1 || q > 9) {
      // no digit form; fall back to a dotted rendering
      out.clear();
      for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(letters_[i]);
      }
      return out;
    }
    out += static_cast<char>('0' + q);
  }
  return out;
}

ModeWord operator+(const ModeWord& a, const ModeWord& b) {
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return ModeWord(std::move(letters));
}

bool word_less(const ModeWord& a, const ModeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

bool valid_word(const ModeWord& w, int mode_count) {
  for (int q : w.letters())
    if (q < 1 || q > mode_count) return false;
  return true;
}

void require_valid_word(const ModeWord& w, int mode_count) {
  for (int q : w.letters())
    if (q < 1 || q > mode_count)
      throw ModeError("mode " + std::to_string(q) + " outside 1.." +
                      std::to_string(mode_count) + " in word " + w.str());
}

std::int64_t word_count(int mode_count, int max_len) {
  if (mode_count < 1) throw ModeError("alphabet must have at least one mode");
  if (max_len < 0) return 0;
  if (mode_count == 1) return static_cast<std::int64_t>(max_len) + 1;
  std::int64_t total = 1;  // the empty word
  std::int64_t level = 1;  // mode_count^t
  for (int t = 1; t <= max_len; ++t) {
    if (level > std::numeric_limits<std::int64_t>::max() / mode_count)
      throw CapacityError("word count overflows for depth " + std::to_string(max_len));
    level *= mode_count;
    if (total > std::numeric_limits<std::int64_t>::max() - level)
      throw CapacityError("word count overflows for depth " + std::to_string(max_len));
    total += level;
  }
  return total;
}

std::vector<ModeWord> enumerate_words(int mode_count, int max_len) {
  if (max_len < 0) return {};
  std::int64_t total = word_count(mode_count, max_len);
  if (total > 50'000'000)
    throw CapacityError("word enumeration of " + std::to_string(total) +
                        " words exceeds the supported range");
  std::vector<ModeWord> words;
  words.reserve(static_cast<std::size_t>(total));
  words.emplace_back();
  std::size_t level_begin = 0;
  for (int t = 1; t <= max_len; ++t) {
    std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int q = 1; q <= mode_count; ++q) words.push_back(words[i].append(q));
    level_begin = level_end;
  }
  return words;
}

std::int64_t word_rank(const ModeWord& w, int mode_count) {
  require_valid_word(w, mode_count);
  std::int64_t rank = word_count(mode_count, w.size() - 1);
  std::int64_t offset = 0;
  for (int q : w.letters()) offset = offset * mode_count + (q - 1);
  return rank + offset;
}

ModeWord word_at(std::int64_t rank, int mode_count) {
  if (rank < 0) throw Error("word rank must be non-negative");
  int len = 0;
  while (word_count(mode_count, len) <= rank) ++len;
  std::int64_t offset = rank - word_count(mode_count, len - 1);
  std::vector<int> letters(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<int>(offset % mode_count) + 1;
    offset /= mode_count;
  }
  return ModeWord(std::move(letters));
}

HybridWord::HybridWord(ModeWord modes, std::vector<Vector> inputs)
    : modes_(std::move(modes)), inputs_(std::move(inputs)) {
  if (modes_.empty())
    throw DimensionError("hybrid word must contain at least one step");
  if (static_cast<int>(inputs_.size()) != modes_.size())
    throw DimensionError("hybrid word has " + std::to_string(modes_.size()) +
                         " modes but " + std::to_string(inputs_.size()) + " inputs");
  for (const Vector& u : inputs_)
    if (u.size() != inputs_.front().size())
      throw DimensionError("hybrid word inputs must share one dimension");
}

HybridWord HybridWord::zero_inputs(ModeWord modes, int input_dim) {
  std::vector<Vector> inputs(static_cast<std::size_t>(modes.size()),
                             Vector::Zero(input_dim));
  return HybridWord(std::move(modes), std::move(inputs));
}

const Vector& HybridWord::input(int pos) const {
  if (pos < 0 || pos >= size())
    throw Error("hybrid word position " + std::to_string(pos) +
                " out of range for length " + std::to_string(size()));
  return inputs_[static_cast<std::size_t>(pos)];
}

int HybridWord::input_dim() const {
  return inputs_.empty() ? 0 : static_cast<int>(inputs_.front().size());
}

HybridWord HybridWord::with_input(int pos, Vector value) const {
  HybridWord out = *this;
  if (pos < 0 || pos >= size())
    throw Error("hybrid word position " + std::to_string(pos) +
                " out of range for length " + std::to_string(size()));
  if (value.size() != input_dim())
    throw DimensionError("replacement input has wrong dimension");
  out.inputs_[static_cast<std::size_t>(pos)] = std::move(value);
  return out;
}

HybridWord operator+(const HybridWord& a, const HybridWord& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.input_dim() != b.input_dim())
    throw DimensionError("cannot concatenate hybrid words with different input dimensions");
  std::vector<Vector> inputs = a.inputs_;
  inputs.insert(inputs.end(), b.inputs_.begin(), b.inputs_.end());
  return HybridWord(a.modes_ + b.modes_, std::move(inputs));
}

}  // namespace lsr
