#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gla/dim_sequence.hpp"
#include "gla/field.hpp"
#include "gla/linalg.hpp"

namespace gla {

/// A named homogeneous basis element of degree >= 1.
struct BasisElement {
  std::string name;
  int degree = 0;
};

/// One bracket assignment as supplied by the caller: [basis[left],
/// basis[right]] = value, with value a vector over the full basis.
struct BracketEntry {
  int left = 0;
  int right = 0;
  SparseVec value;
};

/// A failed axiom, reported as data: which law, on which basis tuple, and
/// the nonzero defect vector witnessing the failure.
struct Violation {
  std::string axiom;  ///< "homogeneity" | "antisymmetry" | "jacobi" | "cube"
  std::vector<std::string> tuple;
  SparseVec defect;
};

/// Graded Lie algebra of finite type presented by structure constants,
/// truncated at degree N: brackets whose target degree exceeds N are
/// unknown, never silently zero, while absent entries with target <= N are
/// genuinely zero.
///
/// Entries are canonicalized to slots (i, j) with i <= j; the mirrored
/// value is derived from the sign rule [x,y] = -(-1)^{|x||y|}[y,x], so
/// antisymmetry can only fail on conflicting double assignments or even
/// self-brackets, both of which the validator reports.  Construction is
/// permissive: axiom failures are data from validate(), not errors.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra(Field field, std::vector<BasisElement> basis,
                   std::vector<BracketEntry> entries, int truncation);

  const Field& field() const { return field_; }
  int truncation() const { return truncation_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const BasisElement& element(int i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }

  /// Index of the named element, or -1.
  int find(const std::string& name) const;

  /// Basis indices living in the given degree (empty past the truncation).
  const std::vector<int>& degree_indices(int degree) const;

  /// Largest degree carrying a basis element; 0 for the zero algebra.
  int top_degree() const { return top_degree_; }

  /// Degreewise dimensions through the truncation.
  DimensionSequence dims() const;

  int parity(int i) const { return basis_.at(i).degree & 1; }

  /// True when every basis pair's bracket target lies within the
  /// truncation: nothing about this algebra is unknown.
  bool complete() const {
    return basis_.empty() || 2 * top_degree_ <= truncation_;
  }

  /// [basis[i], basis[j]] in either index order, sign rule applied.
  /// Target degree past the truncation is an error.
  SparseVec basis_bracket(int i, int j) const;

  /// Bilinear extension to homogeneous vectors.  Degrees are read off the
  /// entries (inputs must be homogeneous); the zero vector brackets to zero
  /// with anything.
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const;

  /// [basis[i], v] for homogeneous v.
  SparseVec ad_basis(int i, const SparseVec& v) const;

  /// [v, basis[k]] for homogeneous v.
  SparseVec bracket_right(const SparseVec& v, int k) const;

  /// Degree of a homogeneous vector (checked); -1 for the zero vector.
  int vector_degree(const SparseVec& v) const;

  /// All axiom failures within the truncation: homogeneity of every
  /// supplied entry, antisymmetry (conflicting mirrors, even self-brackets),
  /// graded Jacobi on ordered triples i <= j <= k with target in range, and
  /// the cube law [x,[x,x]] = 0 for odd x in characteristic 3.
  std::vector<Violation> validate() const;

  /// The canonical (i <= j) table; absent means zero within range.
  const std::map<std::pair<int, int>, SparseVec>& table() const {
    return table_;
  }

 private:
  Field field_;
  std::vector<BasisElement> basis_;
  int truncation_;
  int top_degree_ = 0;
  std::vector<BracketEntry> raw_;
  std::map<std::pair<int, int>, SparseVec> table_;
  std::map<std::string, int> name_index_;
  std::vector<std::vector<int>> by_degree_;
};

/// Basis-disjoint sum: cross brackets vanish, dimensions add degreewise,
/// truncation is the smaller of the two.  Colliding names from the right
/// summand get apostrophes.  The fields must agree.
GradedLieAlgebra direct_sum(const GradedLieAlgebra& a,
                            const GradedLieAlgebra& b);

}  // namespace gla
