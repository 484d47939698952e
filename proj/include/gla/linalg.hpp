#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gla/field.hpp"

namespace gla {

/// Sparse vector: entries sorted by strictly increasing column index,
/// all coefficients nonzero.
struct SparseVec {
  std::vector<std::pair<int, Scalar>> entries;

  bool empty() const { return entries.empty(); }
  int lead() const { return entries.empty() ? -1 : entries.front().first; }
  const Scalar& lead_coeff() const { return entries.front().second; }

  void push(int col, Scalar c) { entries.emplace_back(col, std::move(c)); }

  /// Representation equality; meaningful because every producer in this
  /// library emits the canonical form (sorted columns, reduced nonzero
  /// coefficients).
  bool operator==(const SparseVec& o) const { return entries == o.entries; }
  bool operator!=(const SparseVec& o) const { return !(*this == o); }
};

/// Build a sparse vector from (column, coefficient) terms in any order,
/// combining duplicates and dropping zeros.
SparseVec make_vec(const Field& field,
                   std::vector<std::pair<int, Scalar>> terms);

SparseVec vec_add(const Field& field, const SparseVec& a, const SparseVec& b);
SparseVec vec_scale(const Field& field, const SparseVec& a, const Scalar& c);

/// Incremental exact row reduction with deterministic pivoting: the leading
/// column of each stored row is unique, and insertion order decides
/// everything else.  Over the rationals rows are kept as primitive integer
/// vectors and elimination is fraction-free (cross-multiplication followed
/// by content removal); over a prime field rows are kept monic.
class RowReducer {
 public:
  RowReducer(const Field& field, int cols)
      : field_(field), cols_(cols) {}

  const Field& field() const { return field_; }
  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduce the row against the stored ones and keep the residue if nonzero.
  /// Returns true when the row was independent (rank grew).
  bool insert(SparseVec row);

  /// Residue of v after eliminating every entry sitting on a stored leading
  /// column.  Empty residue == v lies in the span of the inserted rows.
  SparseVec reduce(SparseVec v) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Back-eliminates entries above the pivots and scales each pivot to 1.
  /// After this the stored rows are the reduced row echelon form of the
  /// inserted span.
  void to_rref();

  /// Stored rows ordered by leading column.
  std::vector<const SparseVec*> sorted_rows() const;

  /// Leading (pivot) columns in increasing order.
  std::vector<int> pivot_columns() const;

 private:
  void normalize(SparseVec& v) const;

  Field field_;
  int cols_;
  std::vector<SparseVec> rows_;
  std::map<int, int> lead_to_row_;
};

/// Rank and kernel of the linear map sending domain basis vector i to the
/// given image rows: images[i] holds the coordinates of the image of e_i.
/// The kernel basis is echelonized over the domain coordinates.
struct MapKernel {
  int rank = 0;
  std::vector<SparseVec> kernel;
};

MapKernel map_rank_kernel(const Field& field, int target_cols,
                          const std::vector<SparseVec>& images,
                          bool want_kernel);

}  // namespace gla
