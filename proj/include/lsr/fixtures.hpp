#pragma once

#include "lsr/lss.hpp"
#include "lsr/markov.hpp"

namespace lsr::fixtures {

/// Two-mode SISO system with three states: observable but not span-reachable
/// (every reachable state has a vanishing third coordinate), so its minimal
/// realization has dimension two. Ships as a canned example with the CLI and
/// anchors the golden tests.
SwitchedLinearSystem demo_system();

/// The two-dimensional minimal realization of demo_system's input-output map.
SwitchedLinearSystem demo_system_minimal();

/// Closed-form Markov family of the map realized by both systems above: the
/// zero-input response is 1 exactly on words of the form 2..21 or 2..211, and
/// the impulse response is 1 on the same words once they are longer than two
/// letters. Its Hankel matrix has rank two.
MarkovFamily demo_markov(int depth);

}  // namespace lsr::fixtures
