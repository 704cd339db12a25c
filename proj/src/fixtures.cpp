#include "lsr/fixtures.hpp"

namespace lsr::fixtures {

namespace {

// True for 2..21 and 2..211, the two word shapes the demo map responds to.
bool responsive_word(const ModeWord& w) {
  const int t = w.size();
  if (t < 2) return false;
  if (w.letter(t - 1) != 1) return false;
  const int head = w.letter(t - 2) == 1 ? t - 2 : t - 1;
  for (int i = 0; i < head; ++i)
    if (w.letter(i) != 2) return false;
  return true;
}

}  // namespace

SwitchedLinearSystem demo_system() {
  Matrix a1(3, 3), a2(3, 3);
  a1 << 0, 1, 0,
        0, 0, 1,
        0, 0, 1;
  a2 << 0, 1, 0,
        0, 1, 1,
        0, 0, 1;
  Matrix b1 = Matrix::Zero(3, 1);
  Matrix b2(3, 1);
  b2 << 0, 1, 0;
  Matrix c1(1, 3), c2(1, 3);
  c1 << 1, 0, 0;
  c2 << 0, 0, 1;
  Vector x0(3);
  x0 << 0, 1, 0;
  return SwitchedLinearSystem({a1, a2}, {b1, b2}, {c1, c2}, x0);
}

SwitchedLinearSystem demo_system_minimal() {
  Matrix a1(2, 2), a2(2, 2);
  a1 << 0, 0,
        1, 0;
  a2 << 1, 0,
        1, 0;
  Matrix b1 = Matrix::Zero(2, 1);
  Matrix b2(2, 1);
  b2 << 1, 0;
  Matrix c1(1, 2), c2(1, 2);
  c1 << 0, 1;
  c2 << 0, 0;
  Vector x0(2);
  x0 << 1, 0;
  return SwitchedLinearSystem({a1, a2}, {b1, b2}, {c1, c2}, x0);
}

MarkovFamily demo_markov(int depth) {
  auto s0 = [](const ModeWord& w) {
    Vector v(1);
    v(0) = responsive_word(w) ? 1.0 : 0.0;
    return v;
  };
  auto s = [](const ModeWord& w) {
    Matrix m(1, 1);
    m(0, 0) = (w.size() > 2 && responsive_word(w)) ? 1.0 : 0.0;
    return m;
  };
  return MarkovFamily(2, 1, 1, depth, s0, s);
}

}  // namespace lsr::fixtures
