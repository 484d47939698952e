#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gla/dim_sequence.hpp"
#include "gla/envelope.hpp"
#include "gla/field.hpp"
#include "gla/lie_algebra.hpp"
#include "gla/linalg.hpp"

namespace gla {

/// One action assignment: basis[lie] . basis[mod] = value over the module
/// basis.
struct ActionEntry {
  int lie = 0;
  int mod = 0;
  SparseVec value;
};

/// Graded module of finite type over a graded Lie algebra, presented by
/// action constants and truncated in internal degree.  Absent entries whose
/// target degree stays within the truncation are genuinely zero; past the
/// truncation they are unknown unless the module is marked complete, in
/// which case nothing about it is unknown and absent always means zero.
///
/// Construction is permissive about the axioms: homogeneity of the supplied
/// values and the module law
///   x.(y.m) - (-1)^{|x||y|} y.(x.m) = [x,y].m
/// are reported by validate(), not enforced up front.
class GradedModule {
 public:
  GradedModule(Field field, std::vector<BasisElement> basis,
               std::vector<ActionEntry> entries, int truncation,
               bool complete);

  const Field& field() const { return field_; }
  int truncation() const { return truncation_; }
  bool complete() const { return complete_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const BasisElement& element(int i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int parity(int i) const { return basis_.at(i).degree & 1; }
  int find(const std::string& name) const;
  int top_degree() const { return top_degree_; }
  DimensionSequence dims() const;

  /// basis[lie] . basis[mod]; empty when the action is known to vanish, an
  /// error of kind Truncation when the target degree is past the window of
  /// an incomplete module.
  const SparseVec& act(const GradedLieAlgebra& L, int lie, int mod) const;

  /// Action extended linearly over a module vector.
  SparseVec act_vec(const GradedLieAlgebra& L, int lie,
                    const SparseVec& v) const;

  /// Homogeneity of every entry plus the module law on all triples whose
  /// three sides are available within the windows.
  std::vector<Violation> validate(const GradedLieAlgebra& L) const;

  const std::map<std::pair<int, int>, SparseVec>& table() const {
    return table_;
  }

 private:
  Field field_;
  std::vector<BasisElement> basis_;
  int truncation_;
  bool complete_;
  int top_degree_ = 0;
  std::map<std::pair<int, int>, SparseVec> table_;
  std::map<std::string, int> name_index_;
};

/// The ground field in degree zero with the zero action.
GradedModule trivial_module(const Field& field);

/// The algebra acting on itself by the bracket.
GradedModule adjoint_module(const GradedLieAlgebra& L);

/// The enveloping algebra through the basis window, acted on by left
/// multiplication.  Complete exactly when the algebra is complete and
/// concentrated in odd degrees with the whole envelope inside the window.
GradedModule envelope_module(const EnvelopeBasis& B);

/// Graded dual with the contragredient action
///   (x.f)(m) = -(-1)^{|x||f|} f(x.m).
/// Degrees are reflected and then shifted up by the smallest even S >=
/// M.truncation() so they stay nonnegative with true parities preserved;
/// the basis element dual to m is named m.name + "^" and sits in degree
/// S - deg m.  The dual is always complete.
GradedModule dual_module(const GradedLieAlgebra& L, const GradedModule& M);

/// Shift used by dual_module for this window.
int dual_shift(const GradedModule& M);

/// Tensor product with the diagonal action
///   x.(a (x) b) = (x.a) (x) b + (-1)^{|x||a|} a (x) (x.b).
/// Keeps the basis pairs whose total degree admits both component actions.
GradedModule tensor_module(const GradedLieAlgebra& L, const GradedModule& A,
                           const GradedModule& B);

/// Module over direct_sum(L1, L2) on basis pairs a (x) b: the left summand
/// acts on the left factor, the right summand acts on the right factor
/// through the Koszul sign past a.  The sum must have been built from
/// exactly these summands.
GradedModule external_tensor(const GradedLieAlgebra& sum,
                             const GradedLieAlgebra& L1, const GradedModule& A,
                             const GradedLieAlgebra& L2,
                             const GradedModule& B);

}  // namespace gla
