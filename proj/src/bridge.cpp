#include "lsr/bridge.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lsr {

int jf_size(int mode_count, int input_dim) { return mode_count * input_dim + 1; }

int jf_index(int mode, int channel, int input_dim) {
  return 1 + (mode - 1) * input_dim + (channel - 1);
}

JfLabel jf_label(int position, int mode_count, int input_dim) {
  if (position < 0 || position >= jf_size(mode_count, input_dim))
    throw Error("index position " + std::to_string(position) + " outside 0.." +
                std::to_string(jf_size(mode_count, input_dim) - 1));
  if (position == 0) return JfLabel{};
  return JfLabel{false, (position - 1) / input_dim + 1,
                 (position - 1) % input_dim + 1};
}

SeriesFamily psi_from_markov(const MarkovFamily& family) {
  if (family.depth() != MarkovFamily::kUnboundedDepth && family.depth() < 2)
    throw DepthError("series family needs markov depth >= 2");
  const int d = family.mode_count();
  const int m = family.input_dim();
  const int p = family.output_dim();
  const int depth = family.depth() == MarkovFamily::kUnboundedDepth
                        ? SeriesFamily::kUnboundedDepth
                        : family.depth() - 2;
  return SeriesFamily(
      d, jf_size(d, m), p * d, depth, [family, d, m, p](const ModeWord& w, int j) {
        Vector stacked(p * d);
        if (j == 0) {
          for (int q = 1; q <= d; ++q)
            stacked.segment((q - 1) * p, p) = family.S0(w.append(q));
        } else {
          const JfLabel label = jf_label(j, d, m);
          for (int q = 1; q <= d; ++q)
            stacked.segment((q - 1) * p, p) = family.Sj(
                label.channel, w.prepend(label.mode).append(q));
        }
        return stacked;
      });
}

RationalRepresentation repr_of_lss(const SwitchedLinearSystem& sys) {
  const int d = sys.mode_count();
  const int m = sys.input_dim();
  const int p = sys.output_dim();
  Matrix readout(p * d, sys.state_dim());
  for (int q = 1; q <= d; ++q) readout.middleRows((q - 1) * p, p) = sys.C(q);
  std::vector<Vector> initial(static_cast<std::size_t>(jf_size(d, m)));
  initial[0] = sys.initial_state();
  for (int q = 1; q <= d; ++q)
    for (int l = 1; l <= m; ++l)
      initial[static_cast<std::size_t>(jf_index(q, l, m))] = sys.B(q).col(l - 1);
  return RationalRepresentation(sys.transitions(), std::move(initial),
                                std::move(readout));
}

SwitchedLinearSystem lss_of_repr(const RationalRepresentation& repr) {
  const int d = repr.alphabet_size();
  if (repr.coeff_dim() % d != 0)
    throw DimensionError("coefficient dimension " +
                         std::to_string(repr.coeff_dim()) +
                         " is not a multiple of the alphabet size " +
                         std::to_string(d));
  const int p = repr.coeff_dim() / d;
  if ((repr.index_count() - 1) % d != 0 || repr.index_count() < d + 1)
    throw DimensionError("index set of size " + std::to_string(repr.index_count()) +
                         " does not decompose as D*m+1 with m >= 1");
  const int m = (repr.index_count() - 1) / d;
  const int n = repr.dim();

  std::vector<Matrix> b(static_cast<std::size_t>(d));
  std::vector<Matrix> c(static_cast<std::size_t>(d));
  for (int q = 1; q <= d; ++q) {
    Matrix bq(n, m);
    for (int l = 1; l <= m; ++l) bq.col(l - 1) = repr.B(jf_index(q, l, m));
    b[static_cast<std::size_t>(q - 1)] = std::move(bq);
    c[static_cast<std::size_t>(q - 1)] = repr.C().middleRows((q - 1) * p, p);
  }
  return SwitchedLinearSystem(repr.transitions(), std::move(b), std::move(c),
                              repr.B(0));
}

SeriesHankel series_view(const HankelBlockMatrix& h) {
  return SeriesHankel(h.matrix(), h.mode_count(),
                      h.output_dim() * h.mode_count(),
                      h.input_dim() * h.mode_count() + 1, h.row_depth(),
                      h.col_depth());
}

}  // namespace lsr
