#include "lsr/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lsr/lss.hpp"

namespace lsr {

namespace {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Columns A_w B_j for all words |w| <= max_len in length-first order, the
/// index position j running fastest. Both representations of an isomorphism
/// candidate are expanded with the same ordering.
Matrix reachability_columns(const RationalRepresentation& r, int max_len) {
  const int n = r.dim();
  const int j_count = r.index_count();
  std::vector<Matrix> levels;
  Matrix level0(n, j_count);
  for (int j = 0; j < j_count; ++j) level0.col(j) = r.B(j);
  levels.push_back(level0);
  std::int64_t total_words = word_count(r.alphabet_size(), max_len);
  Matrix columns(n, total_words * j_count);
  Eigen::Index filled = 0;
  columns.middleCols(filled, j_count) = level0;
  filled += j_count;
  for (int len = 1; len <= max_len; ++len) {
    const Matrix& prev = levels.back();
    Matrix next(n, prev.cols() * r.alphabet_size());
    Eigen::Index at = 0;
    // Children of each previous word, in letter order, preserve the
    // length-first enumeration.
    for (Eigen::Index block = 0; block < prev.cols(); block += j_count) {
      for (int s = 1; s <= r.alphabet_size(); ++s) {
        next.middleCols(at, j_count) = r.A(s) * prev.middleCols(block, j_count);
        at += j_count;
      }
    }
    columns.middleCols(filled, next.cols()) = next;
    filled += next.cols();
    levels.push_back(std::move(next));
  }
  return columns;
}

RationalRepresentation zero_dim_repr(int alphabet_size, int index_count,
                                     int coeff_dim) {
  std::vector<Matrix> a(static_cast<std::size_t>(alphabet_size), Matrix(0, 0));
  std::vector<Vector> b(static_cast<std::size_t>(index_count), Vector(0));
  return RationalRepresentation(std::move(a), std::move(b), Matrix(coeff_dim, 0));
}

/// Orthonormal basis of the smallest A-invariant subspace containing the
/// columns of seed, grown one letter-application per level with early stop
/// on saturation. Levels are capped at dim-1, which suffices: once two
/// consecutive spans agree the span is invariant and stops growing.
Matrix invariant_span(const std::vector<Matrix>& transitions, const Matrix& seed,
                      double rank_tol) {
  const auto n = seed.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix basis = image_basis(seed, rank_tol);
  for (Eigen::Index level = 1; level < n; ++level) {
    if (basis.cols() == 0) break;
    Matrix grown(n, basis.cols() * (1 + static_cast<Eigen::Index>(transitions.size())));
    grown.leftCols(basis.cols()) = basis;
    Eigen::Index at = basis.cols();
    for (const Matrix& a : transitions) {
      grown.middleCols(at, basis.cols()) = a * basis;
      at += basis.cols();
    }
    Matrix next = image_basis(grown, rank_tol);
    if (next.cols() == basis.cols()) break;
    basis = std::move(next);
  }
  return basis;
}

}  // namespace

RationalRepresentation::RationalRepresentation(std::vector<Matrix> transitions,
                                               std::vector<Vector> initial_states,
                                               Matrix readout)
    : transitions_(std::move(transitions)),
      initial_(std::move(initial_states)),
      readout_(std::move(readout)) {
  if (transitions_.empty())
    throw DimensionError("representation needs at least one letter");
  if (initial_.empty())
    throw DimensionError("representation needs a non-empty index set");
  const auto n = readout_.cols();
  if (readout_.rows() < 1)
    throw DimensionError("readout must have at least one row");
  for (const Matrix& a : transitions_)
    if (a.rows() != n || a.cols() != n)
      throw DimensionError("transition matrices must be dim x dim");
  for (const Vector& b : initial_)
    if (b.size() != n)
      throw DimensionError("initial states must have the state dimension");
}

const Matrix& RationalRepresentation::A(int letter) const {
  if (letter < 1 || letter > alphabet_size())
    throw ModeError("letter " + std::to_string(letter) + " outside 1.." +
                    std::to_string(alphabet_size()));
  return transitions_[static_cast<std::size_t>(letter - 1)];
}

const Vector& RationalRepresentation::B(int j) const {
  if (j < 0 || j >= index_count())
    throw Error("index position " + std::to_string(j) + " outside 0.." +
                std::to_string(index_count() - 1));
  return initial_[static_cast<std::size_t>(j)];
}

Vector RationalRepresentation::series(const ModeWord& w, int j) const {
  return readout_ * (word_matrix_product(transitions_, w) * B(j));
}

SeriesFamily::SeriesFamily(int alphabet_size, int index_count, int coeff_dim,
                           int depth, std::function<Vector(const ModeWord&, int)> eval)
    : alphabet_size_(alphabet_size),
      index_count_(index_count),
      coeff_dim_(coeff_dim),
      depth_(depth),
      eval_(std::move(eval)) {
  if (alphabet_size_ < 1 || index_count_ < 1 || coeff_dim_ < 1)
    throw DimensionError("series family needs alphabet, index set and coefficients");
  if (depth_ < 0) throw DepthError("series family depth must be >= 0");
}

Vector SeriesFamily::at(const ModeWord& w, int j) const {
  require_valid_word(w, alphabet_size_);
  if (j < 0 || j >= index_count_)
    throw Error("series index " + std::to_string(j) + " outside 0.." +
                std::to_string(index_count_ - 1));
  if (w.size() > depth_)
    throw DepthError("series value at " + w.str() + " exceeds depth " +
                     std::to_string(depth_));
  Vector v = eval_(w, j);
  if (v.size() != coeff_dim_)
    throw DimensionError("series coefficient has wrong dimension");
  return v;
}

SeriesFamily SeriesFamily::of_representation(const RationalRepresentation& repr) {
  return SeriesFamily(repr.alphabet_size(), repr.index_count(), repr.coeff_dim(),
                      kUnboundedDepth,
                      [repr](const ModeWord& w, int j) { return repr.series(w, j); });
}

SeriesHankel::SeriesHankel(Matrix h, int alphabet_size, int coeff_dim,
                           int index_count, int row_depth, int col_depth)
    : h_(std::move(h)),
      alphabet_size_(alphabet_size),
      coeff_dim_(coeff_dim),
      index_count_(index_count),
      row_depth_(row_depth),
      col_depth_(col_depth) {
  if (row_depth_ < 0 || col_depth_ < 0)
    throw DimensionError("hankel depths must be non-negative");
  if (h_.rows() != word_count(alphabet_size_, row_depth_) * coeff_dim_ ||
      h_.cols() != word_count(alphabet_size_, col_depth_) * index_count_)
    throw DimensionError("series hankel matrix has inconsistent shape");
}

Eigen::Index SeriesHankel::row_index(const ModeWord& v, int coordinate) const {
  if (v.size() > row_depth_)
    throw DepthError("row word " + v.str() + " exceeds depth " +
                     std::to_string(row_depth_));
  if (coordinate < 1 || coordinate > coeff_dim_)
    throw Error("row coordinate outside 1.." + std::to_string(coeff_dim_));
  return word_rank(v, alphabet_size_) * coeff_dim_ + coordinate - 1;
}

Eigen::Index SeriesHankel::col_index(const ModeWord& w, int j) const {
  if (w.size() > col_depth_)
    throw DepthError("column word " + w.str() + " exceeds depth " +
                     std::to_string(col_depth_));
  if (j < 0 || j >= index_count_)
    throw Error("column index outside 0.." + std::to_string(index_count_ - 1));
  return word_rank(w, alphabet_size_) * index_count_ + j;
}

SeriesHankel build_series_hankel(const SeriesFamily& family, int row_depth,
                                 int col_depth, std::int64_t max_entries) {
  if (row_depth < 0 || col_depth < 0)
    throw DimensionError("hankel depths must be non-negative");
  if (family.depth() != SeriesFamily::kUnboundedDepth &&
      row_depth + col_depth > family.depth())
    throw DepthError("series hankel needs series depth " +
                     std::to_string(row_depth + col_depth));
  const std::int64_t rows = word_count(family.alphabet_size(), row_depth) *
                            family.coeff_dim();
  const std::int64_t cols = word_count(family.alphabet_size(), col_depth) *
                            family.index_count();
  if (rows * cols > max_entries)
    throw CapacityError("series hankel would hold " + std::to_string(rows * cols) +
                        " entries, above the cap of " + std::to_string(max_entries));

  const std::vector<ModeWord> row_words =
      enumerate_words(family.alphabet_size(), row_depth);
  const std::vector<ModeWord> col_words =
      enumerate_words(family.alphabet_size(), col_depth);
  const int pc = family.coeff_dim();
  const int jc = family.index_count();
  Matrix h(rows, cols);
  for (std::size_t c = 0; c < col_words.size(); ++c) {
    for (int j = 0; j < jc; ++j) {
      for (std::size_t r = 0; r < row_words.size(); ++r) {
        // Entry ((v,i),(w,j)) holds coordinate i of series j at w.v.
        h.block(static_cast<Eigen::Index>(r) * pc,
                static_cast<Eigen::Index>(c) * jc + j, pc, 1) =
            family.at(col_words[c] + row_words[r], j);
      }
    }
  }
  return SeriesHankel(std::move(h), family.alphabet_size(), pc, jc, row_depth,
                      col_depth);
}

Subspace reach_space(const RationalRepresentation& repr, double rank_tol) {
  const int n = repr.dim();
  Matrix seed(n, repr.index_count());
  for (int j = 0; j < repr.index_count(); ++j) seed.col(j) = repr.B(j);
  return Subspace{invariant_span(repr.transitions(), seed, rank_tol)};
}

Subspace obs_space(const RationalRepresentation& repr, double rank_tol) {
  std::vector<Matrix> dual;
  dual.reserve(repr.transitions().size());
  for (const Matrix& a : repr.transitions()) dual.push_back(a.transpose());
  const Matrix coobs = invariant_span(dual, repr.C().transpose(), rank_tol);
  return Subspace{orth_complement(coobs, rank_tol)};
}

ReducedRepresentation reach_reduce(const RationalRepresentation& repr,
                                   double rank_tol) {
  const Matrix v = reach_space(repr, rank_tol).basis;
  std::vector<Matrix> a;
  a.reserve(repr.transitions().size());
  for (const Matrix& t : repr.transitions()) a.push_back(v.transpose() * t * v);
  std::vector<Vector> b;
  b.reserve(static_cast<std::size_t>(repr.index_count()));
  for (int j = 0; j < repr.index_count(); ++j)
    b.push_back(v.transpose() * repr.B(j));
  return ReducedRepresentation{
      RationalRepresentation(std::move(a), std::move(b), repr.C() * v), v};
}

ReducedRepresentation obs_reduce(const RationalRepresentation& repr,
                                 double rank_tol) {
  // Work on the orthogonal complement of the unobservable subspace; the
  // complement carries the quotient dynamics because the unobservable
  // subspace is invariant under every transition.
  std::vector<Matrix> dual;
  dual.reserve(repr.transitions().size());
  for (const Matrix& a : repr.transitions()) dual.push_back(a.transpose());
  const Matrix w = invariant_span(dual, repr.C().transpose(), rank_tol);
  std::vector<Matrix> a;
  a.reserve(repr.transitions().size());
  for (const Matrix& t : repr.transitions()) a.push_back(w.transpose() * t * w);
  std::vector<Vector> b;
  b.reserve(static_cast<std::size_t>(repr.index_count()));
  for (int j = 0; j < repr.index_count(); ++j)
    b.push_back(w.transpose() * repr.B(j));
  return ReducedRepresentation{
      RationalRepresentation(std::move(a), std::move(b), repr.C() * w),
      w.transpose()};
}

RationalRepresentation minimize_repr(const RationalRepresentation& repr,
                                     double rank_tol) {
  return obs_reduce(reach_reduce(repr, rank_tol).repr, rank_tol).repr;
}

RationalRepresentation repr_from_hankel(const SeriesHankel& h, double rank_tol,
                                        double shift_tol) {
  const RankFactorization fac = rank_factorize(h.matrix(), rank_tol);
  const int n = fac.rank;
  if (n == 0)
    return zero_dim_repr(h.alphabet_size(), h.index_count(), h.coeff_dim());
  if (h.col_depth() < 1)
    throw DepthError("column depth 0 leaves no room for the shift map");

  // Coordinates of every column in the rank-n column-space basis.
  const Matrix& coords = fac.right;
  const Eigen::Index shiftable =
      word_count(h.alphabet_size(), h.col_depth() - 1) * h.index_count();
  const Matrix base = coords.leftCols(shiftable);
  const Matrix base_pinv = pseudoinverse(base, rank_tol);
  const double scale = std::max(1.0, max_abs(h.matrix()));

  std::vector<Matrix> a;
  a.reserve(static_cast<std::size_t>(h.alphabet_size()));
  const std::vector<ModeWord> source_words =
      enumerate_words(h.alphabet_size(), h.col_depth() - 1);
  for (int s = 1; s <= h.alphabet_size(); ++s) {
    Matrix shifted(n, shiftable);
    for (std::size_t r = 0; r < source_words.size(); ++r) {
      const Eigen::Index from = static_cast<Eigen::Index>(r) * h.index_count();
      const Eigen::Index to = h.col_index(source_words[r].append(s), 0);
      shifted.middleCols(from, h.index_count()) =
          coords.middleCols(to, h.index_count());
    }
    Matrix a_s = shifted * base_pinv;
    const double residual = max_abs(a_s * base - shifted);
    if (residual > shift_tol * scale)
      throw DepthError("shift by letter " + std::to_string(s) +
                       " is inconsistent (residual " + std::to_string(residual) +
                       "); the hankel matrix is too shallow");
    a.push_back(std::move(a_s));
  }

  std::vector<Vector> b;
  b.reserve(static_cast<std::size_t>(h.index_count()));
  for (int j = 0; j < h.index_count(); ++j)
    b.push_back(coords.col(h.col_index(ModeWord{}, j)));
  return RationalRepresentation(std::move(a), std::move(b),
                                fac.left.topRows(h.coeff_dim()));
}

RationalRepresentation realization_algorithm(const SeriesHankel& h,
                                             double rank_tol) {
  if (h.col_depth() != h.row_depth() + 1)
    throw DimensionError("realization pass expects column depth = row depth + 1");
  const RankFactorization fac = rank_factorize(h.matrix(), rank_tol);
  const int n = fac.rank;
  if (n == 0)
    return zero_dim_repr(h.alphabet_size(), h.index_count(), h.coeff_dim());

  const Matrix& coords = fac.right;
  const Eigen::Index base_cols =
      word_count(h.alphabet_size(), h.row_depth()) * h.index_count();
  const Matrix base = coords.leftCols(base_cols);
  const Matrix base_pinv = pseudoinverse(base, rank_tol);
  const std::vector<ModeWord> base_words =
      enumerate_words(h.alphabet_size(), h.row_depth());

  std::vector<Matrix> a;
  a.reserve(static_cast<std::size_t>(h.alphabet_size()));
  for (int s = 1; s <= h.alphabet_size(); ++s) {
    Matrix shifted(n, base_cols);
    for (std::size_t r = 0; r < base_words.size(); ++r) {
      const Eigen::Index from = static_cast<Eigen::Index>(r) * h.index_count();
      const Eigen::Index to = h.col_index(base_words[r].append(s), 0);
      shifted.middleCols(from, h.index_count()) =
          coords.middleCols(to, h.index_count());
    }
    a.push_back(shifted * base_pinv);
  }

  std::vector<Vector> b;
  b.reserve(static_cast<std::size_t>(h.index_count()));
  for (int j = 0; j < h.index_count(); ++j) b.push_back(coords.col(j));
  return RationalRepresentation(std::move(a), std::move(b),
                                fac.left.topRows(h.coeff_dim()));
}

IsomorphismResult repr_isomorphism(const RationalRepresentation& a,
                                   const RationalRepresentation& b, double tol,
                                   double rank_tol) {
  if (a.alphabet_size() != b.alphabet_size() ||
      a.index_count() != b.index_count() || a.coeff_dim() != b.coeff_dim())
    throw DimensionError("representations are structurally incompatible");

  IsomorphismResult result;
  result.tol = tol;
  if (a.dim() != b.dim()) return result;
  const int n = a.dim();
  if (n == 0) {
    result.ok = true;
    result.T = Matrix(0, 0);
    return result;
  }

  // Reachable representations are determined by their reachability columns;
  // the unique candidate aligns them by least squares.
  const Matrix ka = reachability_columns(a, n - 1);
  const Matrix kb = reachability_columns(b, n - 1);
  Matrix t = kb * pseudoinverse(ka, rank_tol);

  double residual = 0.0;
  for (int s = 1; s <= a.alphabet_size(); ++s)
    residual = std::max(residual, max_abs(t * a.A(s) - b.A(s) * t));
  for (int j = 0; j < a.index_count(); ++j)
    residual = std::max(residual, max_abs(t * a.B(j) - b.B(j)));
  residual = std::max(residual, max_abs(a.C() - b.C() * t));

  result.T = std::move(t);
  result.max_residual = residual;
  result.ok = residual <= tol && numerical_rank(result.T, rank_tol) == n;
  return result;
}

}  // namespace lsr
