#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gla/lie_algebra.hpp"

namespace gla {

/// Homogeneous subspace of a graded Lie algebra, echelonized degree by
/// degree.  Rows are kept in reduced deterministic form, so equal subspaces
/// have identical row sets.  The parent algebra must outlive the subspace.
class GradedSubspace {
 public:
  explicit GradedSubspace(const GradedLieAlgebra& parent) : parent_(&parent) {}

  const GradedLieAlgebra& parent() const { return *parent_; }

  /// Insert a homogeneous vector; returns true when the rank grew.
  /// The zero vector inserts nothing.
  bool insert(const SparseVec& v);

  bool contains(const SparseVec& v) const;

  /// Residue of v modulo the subspace (empty iff contained).
  SparseVec reduce(const SparseVec& v) const;

  int dim(int degree) const;
  int total_dim() const;
  bool empty() const { return total_dim() == 0; }
  DimensionSequence dims() const;

  /// All rows as (degree, vector), degree ascending, leads ascending.
  std::vector<std::pair<int, SparseVec>> rows() const;

  /// Spans the whole parent algebra.
  static GradedSubspace full(const GradedLieAlgebra& parent);

  /// Spans the given parent basis indices.
  static GradedSubspace of_indices(const GradedLieAlgebra& parent,
                                   const std::vector<int>& indices);

 private:
  const GradedLieAlgebra* parent_;
  std::map<int, RowReducer> by_degree_;
};

/// Smallest subalgebra containing the given homogeneous vectors: closure of
/// their span under the bracket, within the truncation.
GradedSubspace subalgebra_generated(const GradedLieAlgebra& L,
                                    const std::vector<SparseVec>& generators);

/// Smallest ideal containing the given homogeneous vectors: closure of
/// their span under bracketing with every basis element, within the
/// truncation.
GradedSubspace ideal_generated(const GradedLieAlgebra& L,
                               const std::vector<SparseVec>& generators);

/// Materialize a bracket-closed graded subspace as an algebra in its own
/// right: one basis element per echelon row, brackets re-expressed in row
/// coordinates, truncation inherited from the parent.  Rows that are a
/// multiple of a single parent basis element keep that element's name;
/// the rest are named prefix1, prefix2, ... in row order.  A bracket of
/// two rows that leaves the span is a BadInput error (the subspace is not
/// closed); brackets past the parent's truncation stay unknown.
GradedLieAlgebra algebra_from_rows(const GradedLieAlgebra& L,
                                   const GradedSubspace& S,
                                   const std::string& prefix);

/// A descending series of subspaces with an honesty flag: `certified` means
/// every bracket the series needed stayed within the truncation, so the
/// reported length is a theorem about the algebra; otherwise later terms
/// could receive contributions from unknown brackets and the length is only
/// what the visible data shows.
struct SeriesReport {
  std::vector<GradedSubspace> terms;
  std::vector<DimensionSequence> term_dims;
  bool certified = false;
  /// Index of the first vanishing term: derived series length (solvlength),
  /// or nilpotency class for the lower central series.
  int length = 0;
  std::string note;
};

/// terms[0] = S, terms[k+1] = [terms[k], terms[k]], until zero.
SeriesReport derived_series(const GradedLieAlgebra& L,
                            const GradedSubspace& S);
SeriesReport derived_series(const GradedLieAlgebra& L);

/// terms[0] = S, terms[k+1] = [S, terms[k]], until zero.
SeriesReport lower_central_series(const GradedLieAlgebra& L,
                                  const GradedSubspace& S);
SeriesReport lower_central_series(const GradedLieAlgebra& L);

/// Span of the even basis elements whose adjoint action is certified
/// nilpotent within the truncation: the orbit of every basis element dies
/// before the next step could leave the known range.  Elements whose orbit
/// survives to the edge are reported unknown, never included — truncation
/// must not manufacture nilpotency.  For a complete algebra every even
/// element certifies and the span is exactly the even part.
struct NilpotentSpanReport {
  GradedSubspace span;
  std::vector<int> certified;  ///< even basis indices proved ad-nilpotent
  std::vector<int> unknown;    ///< even indices blocked by the truncation
  bool exact = false;          ///< complete algebra: span is the whole story
  std::string note;

  explicit NilpotentSpanReport(const GradedLieAlgebra& L) : span(L) {}
};

NilpotentSpanReport nilpotent_even_span(const GradedLieAlgebra& L);

/// Dimensions of the smallest E-stable subspace containing x (iterated
/// adjoint action of E's rows), degree by degree through the truncation.
DimensionSequence orbit_dims(const GradedLieAlgebra& L,
                             const GradedSubspace& E, const SparseVec& x);

/// The ideal of everything above degree n, and the finite-dimensional
/// quotient by it.  The quotient is complete: brackets landing above n are
/// genuinely zero there, so its truncation extends to cover every pair.
struct TruncationSplit {
  GradedSubspace ideal;
  GradedLieAlgebra quotient;
};

TruncationSplit truncation_ideal(const GradedLieAlgebra& L, int n);

}  // namespace gla
