#pragma once

#include <iosfwd>
#include <string>

#include "lsr/hankel.hpp"
#include "lsr/lss.hpp"
#include "lsr/markov.hpp"

namespace lsr::io {

/// System file format: a JSON document
///   {"D": int, "n": int, "m": int, "p": int,
///    "A": [row-major n*n doubles per mode, ordered 1..D],
///    "B": [...], "C": [...], "x0": [n doubles]}
/// Malformed documents raise SchemaError naming the offending field.
SwitchedLinearSystem system_from_json_text(const std::string& text);
std::string system_to_json_text(const SwitchedLinearSystem& sys);
SwitchedLinearSystem load_system(const std::string& path);
void save_system(const SwitchedLinearSystem& sys, const std::string& path);

/// Markov table format: one line per parameter, words as digit strings over
/// 1..D with "-" for the empty word,
///   S0 <word> <p floats>
///   S <j> <q0> <word> <q> <p floats>
/// The dump covers every word up to the requested depth; parsing accepts any
/// complete table and infers D, m, p and the depth.
void dump_markov(std::ostream& out, const MarkovFamily& family, int depth);
MarkovFamily parse_markov(std::istream& in);
MarkovFamily load_markov(const std::string& path);
void save_markov(const MarkovFamily& family, int depth, const std::string& path);

/// Hankel matrix as plain CSV plus a sidecar listing, for every 1-based flat
/// index, the (word, offset) row labels and (word, index) column labels.
void write_hankel_csv(std::ostream& out, const HankelBlockMatrix& h);
void write_hankel_index(std::ostream& out, const HankelBlockMatrix& h);

/// Reads a matrix back from CSV; the caller supplies the structure.
HankelBlockMatrix read_hankel_csv(std::istream& in, int mode_count,
                                  int input_dim, int output_dim, int row_depth,
                                  int col_depth);

}  // namespace lsr::io
