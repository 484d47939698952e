#pragma once

#include <map>
#include <string>
#include <vector>

#include "gla/dim_sequence.hpp"
#include "gla/lie_algebra.hpp"
#include "gla/module.hpp"

namespace gla {

/// One monomial basis element of the q-th exterior power of the suspension
/// tensored with the coefficient module: a weakly increasing list of Lie
/// basis indices (suspended letters, at most one copy where the suspended
/// parity is odd, i.e. where the Lie degree is even) times a module basis
/// index.  Its internal degree is the sum of the letters' Lie degrees plus
/// the module degree; suspensions carry homological degree, not internal
/// degree.
struct CEBasisElement {
  std::vector<int> letters;
  int mod = 0;
};

/// Bigraded chain complex C_{q,d} with boundaries C_{q,d} -> C_{q-1,d},
/// built through homological degree q_max + 1 and internal degree d_max so
/// homology is certifiable through q_max.  The boundary squares to zero on
/// every basis element; this is checked at construction and a failure is a
/// hard internal error, never data.
class ChainComplex {
 public:
  friend ChainComplex ce_chain_complex(const GradedLieAlgebra& L,
                                       const GradedModule& M, int q_max,
                                       int d_max);

  const Field& field() const { return field_; }
  int q_max() const { return q_max_; }
  int d_max() const { return d_max_; }
  /// Valid for 0 <= q <= q_max + 1.
  int dim(int q, int d) const;
  const std::vector<CEBasisElement>& basis(int q, int d) const;
  /// Images of the (q,d) basis in (q-1,d) coordinates; valid for q >= 1.
  const std::vector<SparseVec>& boundary(int q, int d) const;
  /// Rank of the boundary leaving (q,d); zero for q = 0.
  int boundary_rank(int q, int d) const;
  /// Label like "[sx sy | m]" for certificates and tests.
  std::string describe(int q, int d, int k) const;

 private:
  void check_range(int q, int d) const;

  Field field_ = Field::rationals();
  int q_max_ = 0, d_max_ = 0;
  std::vector<std::string> letter_names_, mod_names_;
  // Indexed [q][d].
  std::vector<std::vector<std::vector<CEBasisElement>>> basis_;
  std::vector<std::vector<std::vector<SparseVec>>> boundary_;
  mutable std::vector<std::vector<int>> rank_;  // -1 until computed
};

/// The Chevalley–Eilenberg complex of L with coefficients in M.  Suspended
/// letters born from odd Lie degrees repeat (divided-power directions; the
/// differential uses divided-power multiplicities so prime fields come out
/// right), letters born from even Lie degrees are exterior.  If L is
/// incomplete, d_max must stay within its truncation so every bracket the
/// differential touches is known; the module windows must likewise cover
/// every action the differential needs.
ChainComplex ce_chain_complex(const GradedLieAlgebra& L, const GradedModule& M,
                              int q_max, int d_max);

/// Homology dimensions H_{q,d} for 0 <= q <= q_max as exact counts; entry
/// [q] is the sequence over internal degrees 0..d_max.
std::vector<DimensionSequence> homology_dims(const ChainComplex& C);

}  // namespace gla
