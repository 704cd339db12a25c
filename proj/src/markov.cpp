#include "lsr/markov.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

namespace lsr {

namespace {

std::string key_of(const ModeWord& w) {
  std::string key;
  key.reserve(w.letters().size());
  for (int q : w.letters()) key.push_back(static_cast<char>(q));
  return key;
}

}  // namespace

MarkovFamily::MarkovFamily(int mode_count, int input_dim, int output_dim,
                           int depth,
                           std::function<Vector(const ModeWord&)> zero_input_response,
                           std::function<Matrix(const ModeWord&)> impulse_response)
    : mode_count_(mode_count),
      input_dim_(input_dim),
      output_dim_(output_dim),
      depth_(depth),
      s0_(std::move(zero_input_response)),
      s_(std::move(impulse_response)) {
  if (mode_count_ < 1 || input_dim_ < 1 || output_dim_ < 1)
    throw DimensionError("markov family needs D >= 1, m >= 1, p >= 1");
  if (depth_ < 1) throw DepthError("markov family depth must be >= 1");
}

void MarkovFamily::check_word(const ModeWord& w, int min_len) const {
  require_valid_word(w, mode_count_);
  if (w.size() < min_len)
    throw Error("markov parameter needs a word of length >= " +
                std::to_string(min_len) + ", got " + w.str());
  if (w.size() > depth_)
    throw DepthError("word " + w.str() + " of length " + std::to_string(w.size()) +
                     " exceeds table depth " + std::to_string(depth_));
}

Vector MarkovFamily::S0(const ModeWord& w) const {
  check_word(w, 1);
  Vector v = s0_(w);
  if (v.size() != output_dim_)
    throw DimensionError("zero-input response has wrong dimension");
  return v;
}

Matrix MarkovFamily::S(const ModeWord& w) const {
  check_word(w, 2);
  Matrix m = s_(w);
  if (m.rows() != output_dim_ || m.cols() != input_dim_)
    throw DimensionError("impulse-response block has wrong shape");
  return m;
}

Vector MarkovFamily::Sj(int j, const ModeWord& w) const {
  if (j < 1 || j > input_dim_)
    throw DimensionError("input channel " + std::to_string(j) + " outside 1.." +
                         std::to_string(input_dim_));
  return S(w).col(j - 1);
}

Vector MarkovFamily::Sj(int prefix_mode, const ModeWord& middle, int suffix_mode,
                        int j) const {
  return Sj(j, middle.prepend(prefix_mode).append(suffix_mode));
}

MarkovFamily extract_markov(const IoOracle& f, int depth) {
  if (depth < 1) throw DepthError("extraction depth must be >= 1");
  const int m = f.input_dim();
  const int p = f.output_dim();

  auto s0 = std::make_shared<std::unordered_map<std::string, Vector>>();
  auto s = std::make_shared<std::unordered_map<std::string, Matrix>>();

  for (const ModeWord& w : enumerate_words(f.mode_count(), depth)) {
    if (w.empty()) continue;
    const HybridWord zero = HybridWord::zero_inputs(w, m);
    const Vector base = f(zero);
    (*s0)[key_of(w)] = base;
    if (w.size() < 2) continue;
    Matrix block(p, m);
    for (int j = 1; j <= m; ++j) {
      Vector impulse = Vector::Zero(m);
      impulse(j - 1) = 1.0;
      block.col(j - 1) = f(zero.with_input(0, impulse)) - base;
    }
    (*s)[key_of(w)] = block;
  }

  return MarkovFamily(
      f.mode_count(), m, p, depth,
      [s0](const ModeWord& w) { return s0->at(key_of(w)); },
      [s](const ModeWord& w) { return s->at(key_of(w)); });
}

Vector gcr_evaluate(const MarkovFamily& family, const HybridWord& w) {
  if (w.empty()) throw Error("convolution value is undefined on the empty word");
  if (w.input_dim() != family.input_dim())
    throw DimensionError("inputs have dimension " + std::to_string(w.input_dim()) +
                         ", expected " + std::to_string(family.input_dim()));
  const ModeWord& v = w.modes();
  const int t = v.size() - 1;
  Vector y = family.S0(v);
  // One impulse-response term per step: the word q_k v_{k+1..t-1} q_t.
  for (int k = 0; k < t; ++k) {
    const ModeWord middle = v.sub_word(k + 1, t - 1);
    y += family.S(middle.prepend(v.letter(k)).append(v.letter(t))) * w.input(k);
  }
  return y;
}

GcrReport check_gcr(const IoOracle& f, const MarkovFamily& family, int depth,
                    std::vector<Vector> step_inputs, double tol,
                    std::int64_t max_experiments) {
  if (depth > family.depth())
    throw DepthError("check depth exceeds the family depth");
  const int m = f.input_dim();
  if (step_inputs.empty()) {
    step_inputs.push_back(Vector::Zero(m));
    for (int j = 0; j < m; ++j) {
      Vector e = Vector::Zero(m);
      e(j) = 1.0;
      step_inputs.push_back(e);
    }
    Vector twice = Vector::Zero(m);
    twice(0) = 2.0;
    step_inputs.push_back(twice);
  }
  for (const Vector& u : step_inputs)
    if (u.size() != m) throw DimensionError("sample input has wrong dimension");

  GcrReport report;
  report.tol = tol;
  const auto choices = static_cast<std::int64_t>(step_inputs.size());
  for (const ModeWord& v : enumerate_words(f.mode_count(), depth)) {
    if (v.empty()) continue;
    const int t = v.size();
    // Walk the input tuples in mixed-radix order until the budget runs out.
    std::vector<std::int64_t> digit(static_cast<std::size_t>(t), 0);
    bool done = false;
    while (!done) {
      if (report.experiments >= max_experiments) {
        report.ok = report.max_residual <= tol;
        return report;
      }
      std::vector<Vector> inputs;
      inputs.reserve(static_cast<std::size_t>(t));
      for (int k = 0; k < t; ++k)
        inputs.push_back(step_inputs[static_cast<std::size_t>(digit[k])]);
      const HybridWord w(v, std::move(inputs));
      const double r = (f(w) - gcr_evaluate(family, w)).cwiseAbs().maxCoeff();
      report.max_residual = std::max(report.max_residual, r);
      ++report.experiments;
      int pos = t - 1;
      while (pos >= 0 && ++digit[pos] == choices) digit[pos--] = 0;
      done = pos < 0;
    }
  }
  report.ok = report.max_residual <= tol;
  return report;
}

Matrix combined_markov(const MarkovFamily& family, const ModeWord& v) {
  const int d = family.mode_count();
  const int m = family.input_dim();
  const int p = family.output_dim();
  if (v.size() + 2 > family.depth())
    throw DepthError("combined block for " + v.str() + " needs depth " +
                     std::to_string(v.size() + 2));
  Matrix block(p * d, m * d + 1);
  for (int q = 1; q <= d; ++q) {
    const int row = (q - 1) * p;
    block.block(row, 0, p, 1) = family.S0(v.append(q));
    for (int q0 = 1; q0 <= d; ++q0)
      block.block(row, 1 + (q0 - 1) * m, p, m) =
          family.S(v.prepend(q0).append(q));
  }
  return block;
}

}  // namespace lsr
