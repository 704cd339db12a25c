#pragma once

#include "lsr/common.hpp"
#include "lsr/hankel.hpp"
#include "lsr/lss.hpp"
#include "lsr/markov.hpp"
#include "lsr/rational.hpp"

namespace lsr {

/// The ordered index set shared by every series family derived from a
/// switched system: position 0 carries the initial-state series, position
/// 1 + (q-1)m + (l-1) the series of input channel l under prefix mode q.
struct JfLabel {
  bool initial = true;
  int mode = 0;
  int channel = 0;
};

int jf_size(int mode_count, int input_dim);
int jf_index(int mode, int channel, int input_dim);
JfLabel jf_label(int position, int mode_count, int input_dim);

/// The series family associated with a Markov family: over the mode
/// alphabet, indexed by the set above, with coefficients in R^(p*D).
/// Position 0 at word w stacks S0(w q') over q'; position (q,l) stacks
/// S_l(q w q') over q'. The family depth is the Markov depth minus two.
SeriesFamily psi_from_markov(const MarkovFamily& family);

/// The representation associated with a system: same transition matrices,
/// readout stacks C_1..C_D vertically, initial states are x0 and the columns
/// of the B_q.
RationalRepresentation repr_of_lss(const SwitchedLinearSystem& sys);

/// The system associated with a representation over the index set above:
/// transitions are copied, C_q is the q-th row slice of the readout, B_q
/// collects the channel columns of mode q, x0 is position 0. Inverse of
/// repr_of_lss.
SwitchedLinearSystem lss_of_repr(const RationalRepresentation& repr);

/// Reinterprets a block Hankel matrix of an input-output map as the Hankel
/// matrix of the associated series family. The two indexings address the
/// same entries, so this is a relabeling, not a recomputation.
SeriesHankel series_view(const HankelBlockMatrix& h);

}  // namespace lsr
