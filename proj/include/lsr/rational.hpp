#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lsr/common.hpp"
#include "lsr/numerics.hpp"
#include "lsr/word.hpp"

namespace lsr {

/// A rational representation of a family of formal power series: one
/// transition matrix per letter of the alphabet, a finite ordered family of
/// initial-state vectors, and a readout. It represents the family whose
/// series take the value  readout * A_w * initial[j]  at word w and index j.
class RationalRepresentation {
 public:
  RationalRepresentation(std::vector<Matrix> transitions,
                         std::vector<Vector> initial_states, Matrix readout);

  int alphabet_size() const { return static_cast<int>(transitions_.size()); }
  int dim() const { return static_cast<int>(readout_.cols()); }
  int coeff_dim() const { return static_cast<int>(readout_.rows()); }
  int index_count() const { return static_cast<int>(initial_.size()); }

  /// Transition matrix of a 1-based letter.
  const Matrix& A(int letter) const;
  const std::vector<Matrix>& transitions() const { return transitions_; }

  /// Initial state at 0-based position j in the ordered index set.
  const Vector& B(int j) const;
  const std::vector<Vector>& initial_states() const { return initial_; }

  const Matrix& C() const { return readout_; }

  /// Series value readout * A_w * B(j).
  Vector series(const ModeWord& w, int j) const;

 private:
  std::vector<Matrix> transitions_;
  std::vector<Vector> initial_;
  Matrix readout_;
};

/// A finite, ordered family of formal power series with vector coefficients,
/// presented through an evaluation function of declared depth.
class SeriesFamily {
 public:
  static constexpr int kUnboundedDepth = std::numeric_limits<int>::max();

  SeriesFamily(int alphabet_size, int index_count, int coeff_dim, int depth,
               std::function<Vector(const ModeWord&, int)> eval);

  int alphabet_size() const { return alphabet_size_; }
  int index_count() const { return index_count_; }
  int coeff_dim() const { return coeff_dim_; }
  int depth() const { return depth_; }

  /// Coefficient of series j (0-based) at word w.
  Vector at(const ModeWord& w, int j) const;

  /// The family represented by a representation; unbounded depth.
  static SeriesFamily of_representation(const RationalRepresentation& repr);

 private:
  int alphabet_size_;
  int index_count_;
  int coeff_dim_;
  int depth_;
  std::function<Vector(const ModeWord&, int)> eval_;
};

/// Finite Hankel matrix of a series family. Rows are indexed by (v, i) with
/// |v| <= row_depth and i in 1..coeff_dim, columns by (w, j) with
/// |w| <= col_depth and j a 0-based index-set position; words run length
/// first, so deeper matrices nest. The entry at ((v,i),(w,j)) is coordinate i
/// of series j at the word w.v.
class SeriesHankel {
 public:
  SeriesHankel(Matrix h, int alphabet_size, int coeff_dim, int index_count,
               int row_depth, int col_depth);

  const Matrix& matrix() const { return h_; }
  int alphabet_size() const { return alphabet_size_; }
  int coeff_dim() const { return coeff_dim_; }
  int index_count() const { return index_count_; }
  int row_depth() const { return row_depth_; }
  int col_depth() const { return col_depth_; }

  Eigen::Index row_index(const ModeWord& v, int coordinate) const;  // 1-based coord
  Eigen::Index col_index(const ModeWord& w, int j) const;           // 0-based j

 private:
  Matrix h_;
  int alphabet_size_;
  int coeff_dim_;
  int index_count_;
  int row_depth_;
  int col_depth_;
};

SeriesHankel build_series_hankel(const SeriesFamily& family, int row_depth,
                                 int col_depth,
                                 std::int64_t max_entries = kDefaultEntryCap);

/// Orthonormal basis of a subspace of R^ambient.
struct Subspace {
  Matrix basis;  // ambient x dim, orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }
  int ambient() const { return static_cast<int>(basis.rows()); }
};

/// Span of { A_w B_j : |w| < dim, j }, grown breadth-first with early stop
/// once a level adds nothing; the span cannot grow after that. The
/// representation is reachable when this space is full.
Subspace reach_space(const RationalRepresentation& repr,
                     double rank_tol = kDefaultRankTol);

/// Intersection of the kernels of C A_w over |w| < dim; the unobservable
/// subspace. The representation is observable when it is zero.
Subspace obs_space(const RationalRepresentation& repr,
                   double rank_tol = kDefaultRankTol);

struct ReducedRepresentation {
  RationalRepresentation repr;
  /// For the reachability reduction: an orthonormal basis (dim x k) of the
  /// invariant subspace; the basis is a morphism from the reduced into the
  /// original representation. For the observability reduction: the transpose
  /// maps the original onto the quotient, i.e. map (k x dim) is a morphism
  /// from the original onto the reduced representation.
  Matrix map;
};

/// Restriction to the reachability subspace; represents the same family.
ReducedRepresentation reach_reduce(const RationalRepresentation& repr,
                                   double rank_tol = kDefaultRankTol);

/// Quotient by the unobservable subspace, realized on its orthogonal
/// complement; represents the same family and preserves reachability.
ReducedRepresentation obs_reduce(const RationalRepresentation& repr,
                                 double rank_tol = kDefaultRankTol);

/// Reachability reduction followed by observability reduction; the result is
/// reachable and observable, hence minimal.
RationalRepresentation minimize_repr(const RationalRepresentation& repr,
                                     double rank_tol = kDefaultRankTol);

/// Builds a representation on the column space of a finite Hankel matrix:
/// transitions shift columns by a letter, initial states are the empty-word
/// columns, the readout reads the empty-word rows. The shift equations are
/// solved in column-space coordinates by least squares and verified; a
/// residual above shift_tol (relative to the largest entry) means the matrix
/// is too shallow and raises DepthError.
RationalRepresentation repr_from_hankel(const SeriesHankel& h,
                                        double rank_tol = kDefaultRankTol,
                                        double shift_tol = 1e-6);

/// Hankel realization pass for a matrix with col_depth = row_depth + 1:
/// factors H = O * R through the SVD at the numerical rank, reads the
/// initial states off the empty-word columns of R, the readout off the
/// empty-word rows of O, and each transition as R_shifted * pinv(R_base).
/// Returns a minimal representation whenever the rank of the Hankel matrix
/// has stabilized at these depths.
RationalRepresentation realization_algorithm(const SeriesHankel& h,
                                             double rank_tol = kDefaultRankTol);

struct IsomorphismResult {
  bool ok = false;
  Matrix T;
  double max_residual = 0.0;
  double tol = 0.0;
};

/// Searches for the (unique) isomorphism between two reachable and
/// observable representations of the same family by aligning their finite
/// reachability matrices, then verifying all morphism equations within tol.
IsomorphismResult repr_isomorphism(const RationalRepresentation& a,
                                   const RationalRepresentation& b,
                                   double tol = kDefaultMorphismTol,
                                   double rank_tol = kDefaultRankTol);

}  // namespace lsr
