#pragma once

#include <map>
#include <string>
#include <vector>

#include "gla/dim_sequence.hpp"
#include "gla/lie_algebra.hpp"

namespace gla {

/// Poincaré–Birkhoff–Witt monomial basis of the enveloping algebra through
/// a degree window: weakly increasing products of Lie basis elements in
/// which odd-degree elements appear at most once (squares of odd elements
/// straighten to half their self-bracket).  Monomial counts are checked
/// degreewise against the enveloping series of the algebra's dimension
/// sequence at construction; a mismatch is an internal error.
class EnvelopeBasis {
 public:
  /// Window must satisfy 0 <= truncation <= L.truncation() so that every
  /// structure constant a straightening can touch is known.
  EnvelopeBasis(GradedLieAlgebra L, int truncation);

  const GradedLieAlgebra& algebra() const { return algebra_; }
  int truncation() const { return truncation_; }
  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters(int k) const { return letters_[k]; }
  int degree(int k) const { return degree_[k]; }
  const std::vector<int>& at_degree(int d) const;
  int find(const std::vector<int>& letters) const;
  /// Monomial counts per degree (coincides with pbw_series of the Lie dims).
  DimensionSequence dims() const;
  /// Product name like "1", "x", or "x*z^2".
  std::string name(int k) const;

  /// x_lie * monomial_k, straightened into the basis.  The product degree
  /// must stay within the window.
  const SparseVec& left_mult(int lie, int k) const;

  /// Left action extended to a vector of monomials.
  SparseVec left_mult_vec(int lie, const SparseVec& v) const;

 private:
  SparseVec straighten(int lie, const std::vector<int>& word) const;

  GradedLieAlgebra algebra_;
  int truncation_;
  std::vector<std::vector<int>> letters_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> by_degree_;
  std::map<std::vector<int>, int> index_;
  mutable std::map<std::pair<int, int>, SparseVec> mult_cache_;
};

}  // namespace gla
