#include "lsr/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lsr::io {

namespace {

using nlohmann::json;

std::string key_of(const ModeWord& w) {
  std::string key;
  for (int q : w.letters()) key.push_back(static_cast<char>(q));
  return key;
}

int require_int_field(const json& doc, const char* field, int min_value) {
  if (!doc.contains(field))
    throw SchemaError(std::string("missing field \"") + field + "\"");
  const json& value = doc.at(field);
  if (!value.is_number_integer())
    throw SchemaError(std::string("field \"") + field + "\" must be an integer");
  const int v = value.get<int>();
  if (v < min_value)
    throw SchemaError(std::string("field \"") + field + "\" must be >= " +
                      std::to_string(min_value));
  return v;
}

std::vector<Matrix> parse_mode_matrices(const json& doc, const char* field,
                                        int modes, int rows, int cols) {
  if (!doc.contains(field))
    throw SchemaError(std::string("missing field \"") + field + "\"");
  const json& value = doc.at(field);
  if (!value.is_array() || static_cast<int>(value.size()) != modes)
    throw SchemaError(std::string("field \"") + field + "\" must be an array of " +
                      std::to_string(modes) + " matrices");
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(modes));
  for (int q = 0; q < modes; ++q) {
    const json& flat = value.at(q);
    const std::string tag =
        std::string("field \"") + field + "\" mode " + std::to_string(q + 1);
    if (!flat.is_array() || static_cast<int>(flat.size()) != rows * cols)
      throw SchemaError(tag + " must hold " + std::to_string(rows * cols) +
                        " numbers (row-major " + std::to_string(rows) + "x" +
                        std::to_string(cols) + ")");
    Matrix m(rows, cols);
    for (int i = 0; i < rows * cols; ++i) {
      if (!flat.at(i).is_number())
        throw SchemaError(tag + " entry " + std::to_string(i) + " is not a number");
      m(i / cols, i % cols) = flat.at(i).get<double>();
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<double> row_major(const Matrix& m) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
  return flat;
}

void print_vector(std::ostream& out, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << v(i);
}

}  // namespace

SwitchedLinearSystem system_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  const int d = require_int_field(doc, "D", 1);
  const int n = require_int_field(doc, "n", 0);
  const int m = require_int_field(doc, "m", 1);
  const int p = require_int_field(doc, "p", 1);
  std::vector<Matrix> a = parse_mode_matrices(doc, "A", d, n, n);
  std::vector<Matrix> b = parse_mode_matrices(doc, "B", d, n, m);
  std::vector<Matrix> c = parse_mode_matrices(doc, "C", d, p, n);
  if (!doc.contains("x0")) throw SchemaError("missing field \"x0\"");
  const json& x0_json = doc.at("x0");
  if (!x0_json.is_array() || static_cast<int>(x0_json.size()) != n)
    throw SchemaError("field \"x0\" must hold n = " + std::to_string(n) +
                      " numbers");
  Vector x0(n);
  for (int i = 0; i < n; ++i) {
    if (!x0_json.at(i).is_number())
      throw SchemaError("field \"x0\" entry " + std::to_string(i) +
                        " is not a number");
    x0(i) = x0_json.at(i).get<double>();
  }
  return SwitchedLinearSystem(std::move(a), std::move(b), std::move(c),
                              std::move(x0));
}

std::string system_to_json_text(const SwitchedLinearSystem& sys) {
  json doc;
  doc["D"] = sys.mode_count();
  doc["n"] = sys.state_dim();
  doc["m"] = sys.input_dim();
  doc["p"] = sys.output_dim();
  json a = json::array(), b = json::array(), c = json::array();
  for (int q = 1; q <= sys.mode_count(); ++q) {
    a.push_back(row_major(sys.A(q)));
    b.push_back(row_major(sys.B(q)));
    c.push_back(row_major(sys.C(q)));
  }
  doc["A"] = std::move(a);
  doc["B"] = std::move(b);
  doc["C"] = std::move(c);
  doc["x0"] = std::vector<double>(sys.initial_state().data(),
                                  sys.initial_state().data() + sys.state_dim());
  return doc.dump(2);
}

SwitchedLinearSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return system_from_json_text(buffer.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void save_system(const SwitchedLinearSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << system_to_json_text(sys) << '\n';
}

void dump_markov(std::ostream& out, const MarkovFamily& family, int depth) {
  if (family.depth() != MarkovFamily::kUnboundedDepth && depth > family.depth())
    throw DepthError("dump depth exceeds the family depth");
  if (family.mode_count() > 9)
    throw SchemaError("the text table format only covers alphabets with D <= 9");
  out << std::setprecision(17);
  for (const ModeWord& w : enumerate_words(family.mode_count(), depth)) {
    if (w.empty()) continue;
    out << "S0 " << w.str();
    print_vector(out, family.S0(w));
    out << '\n';
    if (w.size() < 2) continue;
    const int t = w.size();
    const ModeWord middle = w.sub_word(1, t - 2);
    for (int j = 1; j <= family.input_dim(); ++j) {
      out << "S " << j << ' ' << w.letter(0) << ' ' << middle.str() << ' '
          << w.letter(t - 1);
      print_vector(out, family.Sj(j, w));
      out << '\n';
    }
  }
}

MarkovFamily parse_markov(std::istream& in) {
  auto s0 = std::make_shared<std::unordered_map<std::string, Vector>>();
  auto sj = std::make_shared<std::unordered_map<std::string, std::unordered_map<int, Vector>>>();
  int modes = 1, channels = 1, outputs = -1, depth = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    const std::string where = "line " + std::to_string(line_no);
    ModeWord word;
    int channel = 0;
    if (kind == "S0") {
      std::string text;
      if (!(fields >> text)) throw SchemaError(where + ": S0 needs a word");
      word = ModeWord::parse(text);
      if (word.empty()) throw SchemaError(where + ": S0 word must be non-empty");
    } else if (kind == "S") {
      int prefix = 0, suffix = 0;
      std::string text;
      if (!(fields >> channel >> prefix >> text >> suffix))
        throw SchemaError(where + ": S needs <j> <q0> <word> <q>");
      if (channel < 1) throw SchemaError(where + ": channel must be >= 1");
      word = ModeWord::parse(text).prepend(prefix).append(suffix);
      channels = std::max(channels, channel);
    } else {
      throw SchemaError(where + ": expected S0 or S, got \"" + kind + "\"");
    }
    std::vector<double> values;
    double v = 0.0;
    while (fields >> v) values.push_back(v);
    if (values.empty()) throw SchemaError(where + ": no values");
    if (outputs == -1) outputs = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != outputs)
      throw SchemaError(where + ": expected " + std::to_string(outputs) +
                        " values, got " + std::to_string(values.size()));
    for (int q : word.letters()) modes = std::max(modes, q);
    depth = std::max(depth, word.size());
    Vector vec = Eigen::Map<const Vector>(values.data(),
                                          static_cast<Eigen::Index>(values.size()));
    if (kind == "S0")
      (*s0)[key_of(word)] = std::move(vec);
    else
      (*sj)[key_of(word)][channel] = std::move(vec);
  }
  if (outputs == -1) throw SchemaError("empty markov table");

  // A table must be complete up to its depth; a missing word would otherwise
  // surface later as a misleading lookup failure.
  for (const ModeWord& w : enumerate_words(modes, depth)) {
    if (w.empty()) continue;
    if (!s0->count(key_of(w)))
      throw SchemaError("table is missing S0 for word " + w.str());
    if (w.size() < 2) continue;
    auto it = sj->find(key_of(w));
    for (int j = 1; j <= channels; ++j)
      if (it == sj->end() || !it->second.count(j))
        throw SchemaError("table is missing S channel " + std::to_string(j) +
                          " for word " + w.str());
  }

  const int p = outputs;
  const int m = channels;
  return MarkovFamily(
      modes, m, p, depth,
      [s0](const ModeWord& w) { return s0->at(key_of(w)); },
      [sj, p, m](const ModeWord& w) {
        Matrix block(p, m);
        const auto& per_channel = sj->at(key_of(w));
        for (int j = 1; j <= m; ++j) block.col(j - 1) = per_channel.at(j);
        return block;
      });
}

MarkovFamily load_markov(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return parse_markov(in);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void save_markov(const MarkovFamily& family, int depth, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  dump_markov(out, family, depth);
}

void write_hankel_csv(std::ostream& out, const HankelBlockMatrix& h) {
  out << std::setprecision(17);
  const Matrix& m = h.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << m(r, c);
    }
    out << '\n';
  }
}

void write_hankel_index(std::ostream& out, const HankelBlockMatrix& h) {
  out << "# row <flat index> <word> <offset>\n";
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    const HankelRowLabel label = h.row_label(r);
    out << "row " << r + 1 << ' ' << label.word.str() << ' ' << label.offset
        << '\n';
  }
  out << "# col <flat index> <word> <0 | q,z>\n";
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    const HankelColumnLabel label = h.col_label(c);
    out << "col " << c + 1 << ' ' << label.word.str() << ' ';
    if (label.initial)
      out << 0;
    else
      out << label.prefix_mode << ',' << label.channel;
    out << '\n';
  }
}

HankelBlockMatrix read_hankel_csv(std::istream& in, int mode_count, int input_dim,
                                  int output_dim, int row_depth, int col_depth) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw SchemaError("line " + std::to_string(line_no) +
                          ": \"" + cell + "\" is not a number");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw SchemaError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(rows.front().size()) + " cells");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SchemaError("empty csv");
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return HankelBlockMatrix(std::move(m), mode_count, input_dim, output_dim,
                           row_depth, col_depth);
}

}  // namespace lsr::io
