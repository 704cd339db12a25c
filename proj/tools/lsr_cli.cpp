// Command-line front end: simulation, Markov extraction, Hankel assembly,
// rank reports, minimization, realization from data, and isomorphism checks,
// over the JSON / text / CSV formats defined in lsr/io.hpp.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsr/bridge.hpp"
#include "lsr/fixtures.hpp"
#include "lsr/hankel.hpp"
#include "lsr/io.hpp"
#include "lsr/lss.hpp"
#include "lsr/markov.hpp"
#include "lsr/realization.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    try {
      values.push_back(std::stoi(cell));
    } catch (const std::exception&) {
      throw lsr::SchemaError(std::string(what) + ": \"" + cell +
                             "\" is not an integer");
    }
  }
  if (values.empty())
    throw lsr::SchemaError(std::string(what) + ": empty list");
  return values;
}

std::vector<lsr::Vector> load_inputs_csv(const std::string& path, int input_dim) {
  std::ifstream in(path);
  if (!in) throw lsr::Error("cannot open " + path);
  std::vector<lsr::Vector> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(fields, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw lsr::SchemaError(path + " line " + std::to_string(line_no) +
                               ": \"" + cell + "\" is not a number");
      }
    }
    if (static_cast<int>(values.size()) != input_dim)
      throw lsr::SchemaError(path + " line " + std::to_string(line_no) +
                             ": expected " + std::to_string(input_dim) +
                             " values per step");
    rows.push_back(Eigen::Map<const lsr::Vector>(
        values.data(), static_cast<Eigen::Index>(values.size())));
  }
  return rows;
}

void print_matrix(std::ostream& out, const lsr::Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << " ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << " " << m(r, c);
    out << "\n";
  }
}

void print_spectrum(std::ostream& out, const char* label,
                    const Eigen::VectorXd& sv) {
  out << label;
  for (Eigen::Index i = 0; i < sv.size(); ++i) out << " " << sv(i);
  out << "\n";
}

/// Largest deviation between the Markov parameters of two systems, compared
/// on every word up to the given depth.
double markov_residual(const lsr::SwitchedLinearSystem& a,
                       const lsr::SwitchedLinearSystem& b, int depth) {
  const lsr::MarkovFamily fa = lsr::extract_markov(lsr::io_map(a), depth);
  const lsr::MarkovFamily fb = lsr::extract_markov(lsr::io_map(b), depth);
  double residual = 0.0;
  for (const lsr::ModeWord& w : lsr::enumerate_words(a.mode_count(), depth)) {
    if (w.empty()) continue;
    residual = std::max(residual,
                        (fa.S0(w) - fb.S0(w)).cwiseAbs().maxCoeff());
    if (w.size() >= 2)
      residual = std::max(residual,
                          (fa.S(w) - fb.S(w)).cwiseAbs().maxCoeff());
  }
  return residual;
}

int pick_validation_depth(int state_dim, int mode_count) {
  // Aim for 2n+1 but keep the word count tractable for large alphabets.
  int depth = 2 * state_dim + 1;
  while (depth > 2 && lsr::word_count(mode_count, depth) > 20000) --depth;
  return std::max(depth, 2);
}

int run_simulate(const std::string& path, const std::string& word_text,
                 const std::string& inputs_path) {
  const lsr::SwitchedLinearSystem sys = lsr::io::load_system(path);
  const lsr::ModeWord word(parse_int_list(word_text, "--word"));
  std::vector<lsr::Vector> inputs;
  if (inputs_path.empty()) {
    inputs.assign(static_cast<std::size_t>(word.size()),
                  lsr::Vector::Zero(sys.input_dim()));
  } else {
    inputs = load_inputs_csv(inputs_path, sys.input_dim());
    if (static_cast<int>(inputs.size()) != word.size())
      throw lsr::SchemaError("inputs file has " + std::to_string(inputs.size()) +
                             " rows but the word has " +
                             std::to_string(word.size()) + " letters");
  }
  const lsr::HybridWord w(word, std::move(inputs));
  const std::vector<lsr::Vector> ys =
      lsr::simulate_trajectory(sys, sys.initial_state(), w);
  for (std::size_t t = 0; t < ys.size(); ++t) {
    std::cout << "y[" << t << "]";
    for (Eigen::Index i = 0; i < ys[t].size(); ++i) std::cout << " " << ys[t](i);
    std::cout << "\n";
  }
  return kExitOk;
}

int run_markov(const std::string& system_path, const std::string& dataset_path,
               int depth, const std::string& out_path) {
  std::ostringstream table;
  if (!system_path.empty()) {
    const lsr::SwitchedLinearSystem sys = lsr::io::load_system(system_path);
    if (depth <= 0) depth = sys.state_dim() + 1;
    const lsr::MarkovFamily family = lsr::extract_markov(lsr::io_map(sys), depth);
    lsr::io::dump_markov(table, family, depth);
  } else {
    const lsr::MarkovFamily family = lsr::io::load_markov(dataset_path);
    lsr::io::dump_markov(table, family, depth);
  }
  if (out_path.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw lsr::Error("cannot write " + out_path);
    out << table.str();
  }
  return kExitOk;
}

int run_hankel(const std::string& markov_path, int row_depth, int col_depth,
               bool with_rank, double rank_tol, std::int64_t max_entries,
               std::string out_stem) {
  const lsr::MarkovFamily family = lsr::io::load_markov(markov_path);
  const lsr::HankelBlockMatrix h =
      lsr::build_hankel(family, row_depth, col_depth, max_entries);
  if (out_stem.empty())
    out_stem = std::filesystem::path(markov_path).stem().string() + "-hankel";
  const std::string csv_path = out_stem + ".csv";
  const std::string index_path = out_stem + ".index.txt";
  {
    std::ofstream csv(csv_path);
    if (!csv) throw lsr::Error("cannot write " + csv_path);
    lsr::io::write_hankel_csv(csv, h);
    std::ofstream index(index_path);
    if (!index) throw lsr::Error("cannot write " + index_path);
    lsr::io::write_hankel_index(index, h);
  }
  std::cout << "hankel: " << h.rows() << " x " << h.cols() << " (row depth "
            << row_depth << ", column depth " << col_depth << ")\n"
            << "csv: " << csv_path << "\nindex: " << index_path << "\n";
  if (with_rank) {
    const lsr::RankDecision rank = lsr::hankel_rank(h, rank_tol);
    std::cout << "rank: " << rank.rank << "\n";
    std::cout << "rank tolerance: " << rank_tol << " (relative)\n";
    print_spectrum(std::cout, "singular values:", rank.singular_values);
    if (rank.borderline)
      std::cout << "warning: a singular value sits within a factor 10 of the "
                   "cutoff; the rank decision is ill-conditioned\n";
  }
  return kExitOk;
}

int run_check(const std::string& path, double rank_tol) {
  const lsr::SwitchedLinearSystem sys = lsr::io::load_system(path);
  const lsr::RankDecision reach = lsr::span_reachability_test(sys, rank_tol);
  const lsr::RankDecision obs = lsr::observability_test(sys, rank_tol);
  const bool reachable = reach.rank == sys.state_dim();
  const bool observable = obs.rank == sys.state_dim();
  std::cout << "state dimension: " << sys.state_dim() << "\n"
            << "span-reachable: " << (reachable ? "yes" : "no") << " (rank "
            << reach.rank << ")\n"
            << "observable: " << (observable ? "yes" : "no") << " (rank "
            << obs.rank << ")\n"
            << "minimal: " << (reachable && observable ? "yes" : "no") << "\n"
            << "rank tolerance: " << rank_tol << " (relative)\n";
  print_spectrum(std::cout, "reachability singular values:",
                 reach.singular_values);
  print_spectrum(std::cout, "observability singular values:",
                 obs.singular_values);
  if (reach.borderline || obs.borderline)
    std::cout << "warning: a singular value sits within a factor 10 of the "
                 "cutoff; the rank decision is ill-conditioned\n";
  return kExitOk;
}

int run_minimize(const std::string& path, const std::string& out_path,
                 double rank_tol, int validate_depth) {
  const lsr::SwitchedLinearSystem sys = lsr::io::load_system(path);
  const lsr::LssMinimization min = lsr::minimize_lss(sys, rank_tol);
  lsr::io::save_system(min.system, out_path);
  if (validate_depth <= 0)
    validate_depth = pick_validation_depth(sys.state_dim(), sys.mode_count());
  const double residual = markov_residual(sys, min.system, validate_depth);
  std::cout << "dimension: " << sys.state_dim() << " -> "
            << min.system.state_dim() << "\n"
            << "output: " << out_path << "\n"
            << "rank tolerance: " << rank_tol << " (relative)\n"
            << "projection (minimal x original):\n";
  print_matrix(std::cout, min.projection);
  std::cout << "io residual (markov parameters to depth " << validate_depth
            << "): " << residual << "\n";
  if (residual > 1e-6) {
    std::cout << "error: the reduced system does not reproduce the "
                 "input-output map\n";
    return kExitValidation;
  }
  return kExitOk;
}

int run_realize(const std::string& data_path, int depth_bound,
                const std::string& dims_text, const std::string& out_path,
                double rank_tol, double validation_tol,
                std::int64_t max_entries) {
  const std::vector<int> dims = parse_int_list(dims_text, "--dims");
  if (dims.size() != 3)
    throw lsr::SchemaError("--dims must be D,m,p");
  const int d = dims[0], m = dims[1], p = dims[2];

  std::optional<lsr::HankelBlockMatrix> h;
  if (std::filesystem::path(data_path).extension() == ".csv") {
    std::ifstream in(data_path);
    if (!in) throw lsr::Error("cannot open " + data_path);
    h = lsr::io::read_hankel_csv(in, d, m, p, depth_bound, depth_bound + 1);
  } else {
    const lsr::MarkovFamily family = lsr::io::load_markov(data_path);
    if (family.mode_count() != d || family.input_dim() != m ||
        family.output_dim() != p)
      throw lsr::SchemaError("--dims " + dims_text +
                             " do not match the table (D=" +
                             std::to_string(family.mode_count()) + ", m=" +
                             std::to_string(family.input_dim()) + ", p=" +
                             std::to_string(family.output_dim()) + ")");
    h = lsr::build_hankel(family, depth_bound, depth_bound + 1, max_entries);
  }

  try {
    const lsr::RealizationReport report =
        lsr::algorithm_1(*h, rank_tol, validation_tol);
    lsr::io::save_system(report.system, out_path);
    std::cout << "dimension: " << report.system.state_dim() << "\n"
              << "output: " << out_path << "\n"
              << "rank tolerance: " << rank_tol << " (relative)\n"
              << "validation tolerance: " << validation_tol << "\n"
              << "validation residual: " << report.markov_residual << "\n";
    print_spectrum(std::cout, "singular values:", report.rank.singular_values);
    if (report.rank.borderline)
      std::cout << "warning: a singular value sits within a factor 10 of the "
                   "cutoff; the rank decision is ill-conditioned\n";
    return kExitOk;
  } catch (const lsr::HypothesisError& e) {
    std::cout << "realization failed: " << e.what() << "\n"
              << "validation residual: " << e.max_residual() << "\n";
    return kExitValidation;
  }
}

int run_compare(const std::string& path_a, const std::string& path_b,
                double tol, double rank_tol, int depth) {
  const lsr::SwitchedLinearSystem a = lsr::io::load_system(path_a);
  const lsr::SwitchedLinearSystem b = lsr::io::load_system(path_b);

  const bool a_minimal = lsr::is_span_reachable(a, rank_tol) &&
                         lsr::is_observable(a, rank_tol);
  const bool b_minimal = lsr::is_span_reachable(b, rank_tol) &&
                         lsr::is_observable(b, rank_tol);
  lsr::SwitchedLinearSystem ma =
      a_minimal ? a : lsr::minimize_lss(a, rank_tol).system;
  lsr::SwitchedLinearSystem mb =
      b_minimal ? b : lsr::minimize_lss(b, rank_tol).system;
  if (!a_minimal || !b_minimal)
    std::cout << "note: comparing the minimizations (" << a.state_dim()
              << " -> " << ma.state_dim() << ", " << b.state_dim() << " -> "
              << mb.state_dim() << ")\n";

  if (depth <= 0)
    depth = pick_validation_depth(
        std::max(ma.state_dim(), mb.state_dim()), ma.mode_count());
  std::cout << "tolerance: " << tol << "\n";

  if (ma.state_dim() != mb.state_dim()) {
    std::cout << "not isomorphic: minimal dimensions differ ("
              << ma.state_dim() << " vs " << mb.state_dim() << ")\n";
    return kExitValidation;
  }
  const lsr::LssIsomorphismResult iso = lsr::lss_isomorphism(ma, mb, tol, rank_tol);
  const double io_res = markov_residual(ma, mb, depth);
  std::cout << "io residual (markov parameters to depth " << depth
            << "): " << io_res << "\n";
  if (!iso.ok) {
    std::cout << "not isomorphic (morphism residual " << iso.max_residual
              << ")\n";
    return kExitValidation;
  }
  std::cout << "isomorphic, morphism residual " << iso.max_residual << "\n"
            << "morphism (second x first):\n";
  print_matrix(std::cout, iso.T);
  return kExitOk;
}

int run_examples(const std::string& which, const std::string& dir, int depth) {
  const std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  if (which == "paper-1") {
    const std::string sigma = (base / "paper1-sigma.json").string();
    const std::string minimal = (base / "paper1-sigma-min.json").string();
    lsr::io::save_system(lsr::fixtures::demo_system(), sigma);
    lsr::io::save_system(lsr::fixtures::demo_system_minimal(), minimal);
    std::cout << sigma << "\n" << minimal << "\n";
    return kExitOk;
  }
  if (which == "paper-2") {
    const std::string table = (base / "paper2-markov.txt").string();
    lsr::io::save_markov(lsr::fixtures::demo_markov(depth), depth, table);
    std::cout << table << "\n";
    return kExitOk;
  }
  std::cerr << "unknown example \"" << which << "\" (use paper-1 or paper-2)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::setprecision(17);
  CLI::App app{"realization toolkit for discrete-time linear switched systems"};
  app.require_subcommand(1);

  std::string system_path, dataset_path, out_path, word_text, inputs_path;
  std::string data_path, path_a, path_b, which, dir = ".";
  std::string dims_text;
  int depth = 0, row_depth = 0, col_depth = 0, depth_bound = 0;
  int fixture_depth = 8, validate_depth = 0;
  double rank_tol = lsr::kDefaultRankTol;
  double morph_tol = lsr::kDefaultMorphismTol;
  double validation_tol = 1e-8;
  std::int64_t max_entries = lsr::kDefaultEntryCap;
  bool with_rank = false;

  auto* simulate = app.add_subcommand("simulate", "print outputs along a hybrid word");
  simulate->add_option("system", system_path, "system JSON file")->required();
  simulate->add_option("--word", word_text, "comma-separated modes, e.g. 1,2,2")
      ->required();
  simulate->add_option("--inputs", inputs_path,
                       "CSV of inputs, one row per step (default: zeros)");

  auto* markov = app.add_subcommand("markov", "dump a Markov parameter table");
  markov->add_option("system", system_path, "system JSON file");
  markov->add_option("--dataset", dataset_path, "existing Markov table");
  markov->add_option("--depth", depth, "table depth (default n+1 for a system)");
  markov->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* hankel = app.add_subcommand("hankel", "assemble a Hankel matrix from a table");
  hankel->add_option("table", data_path, "Markov table file")->required();
  hankel->add_option("--L", row_depth, "row depth")->required();
  hankel->add_option("--M", col_depth, "column depth")->required();
  hankel->add_flag("--rank", with_rank, "print rank and singular values");
  hankel->add_option("--tol", rank_tol, "relative rank tolerance");
  hankel->add_option("--max-entries", max_entries, "dense allocation cap");
  hankel->add_option("-o,--output", out_path, "output stem");

  auto* check = app.add_subcommand(
      "check", "span-reachability / observability / minimality report");
  check->add_option("system", system_path, "system JSON file")->required();
  check->add_option("--tol", rank_tol, "relative rank tolerance");

  auto* minimize =
      app.add_subcommand("minimize", "replace a system by a minimal realization");
  minimize->add_option("system", system_path, "system JSON file")->required();
  minimize->add_option("-o,--output", out_path, "output JSON file")->required();
  minimize->add_option("--tol", rank_tol, "relative rank tolerance");
  minimize->add_option("--validate-depth", validate_depth,
                       "depth of the io-preservation check");

  auto* realize = app.add_subcommand("realize", "reconstruct a system from data");
  realize->add_option("data", data_path,
                      "Markov table (.txt) or Hankel matrix (.csv)")
      ->required();
  realize->add_option("--N", depth_bound, "realization depth bound")->required();
  realize->add_option("--dims", dims_text, "D,m,p of the underlying map")
      ->required();
  realize->add_option("-o,--output", out_path, "output JSON file")->required();
  realize->add_option("--tol", rank_tol, "relative rank tolerance");
  realize->add_option("--validation-tol", validation_tol,
                      "largest acceptable validation residual");
  realize->add_option("--max-entries", max_entries, "dense allocation cap");

  auto* compare = app.add_subcommand("compare", "isomorphism between two systems");
  compare->add_option("a", path_a, "first system JSON file")->required();
  compare->add_option("b", path_b, "second system JSON file")->required();
  compare->add_option("--tol", morph_tol, "morphism residual tolerance");
  compare->add_option("--rank-tol", rank_tol, "relative rank tolerance");
  compare->add_option("--depth", depth, "depth of the io residual check");

  auto* examples = app.add_subcommand("examples", "emit the canned example files");
  examples->add_option("which", which, "paper-1 or paper-2")->required();
  examples->add_option("--dir", dir, "output directory (default .)");
  examples->add_option("--depth", fixture_depth, "table depth for paper-2");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed())
      return run_simulate(system_path, word_text, inputs_path);
    if (markov->parsed()) {
      if (system_path.empty() == dataset_path.empty()) {
        std::cerr << "markov: give either a system file or --dataset\n";
        return kExitUsage;
      }
      if (system_path.empty() && depth <= 0) {
        std::cerr << "markov: --depth is required with --dataset\n";
        return kExitUsage;
      }
      return run_markov(system_path, dataset_path, depth, out_path);
    }
    if (hankel->parsed())
      return run_hankel(data_path, row_depth, col_depth, with_rank, rank_tol,
                        max_entries, out_path);
    if (check->parsed()) return run_check(system_path, rank_tol);
    if (minimize->parsed())
      return run_minimize(system_path, out_path, rank_tol, validate_depth);
    if (realize->parsed())
      return run_realize(data_path, depth_bound, dims_text, out_path, rank_tol,
                         validation_tol, max_entries);
    if (compare->parsed())
      return run_compare(path_a, path_b, morph_tol, rank_tol, depth);
    if (examples->parsed()) return run_examples(which, dir, fixture_depth);
  } catch (const lsr::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lsr::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kExitValidation;
  } catch (const lsr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
