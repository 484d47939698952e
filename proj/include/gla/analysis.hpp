#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gla/dim_sequence.hpp"
#include "gla/ext.hpp"
#include "gla/lie_algebra.hpp"
#include "gla/series.hpp"
#include "gla/subspace.hpp"

namespace gla {

/// Outcome of a per-instance claim check.  Violated is only ever produced
/// from exact data (a complete instance whose numbers are certified); a
/// window that merely disagrees with a claim yields TruncationLimited,
/// because the disagreement could be a truncation artifact.
enum class Verdict { Holds, Violated, TruncationLimited };

std::string verdict_name(Verdict v);

/// One evaluated comparison: both sides carry the numbers that entered,
/// and the provenance says whether those numbers are exact values or
/// window-limited estimates.
struct CheckedInequality {
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string relation = "<=";
  bool holds = false;
  bool exact = false;      ///< every number on both sides is exact
  std::string provenance;  ///< "exact" or what limits the numbers
};

/// Per-instance verification report.  A Violated verdict carries a
/// machine-reverifiable counterexample: enough labeled values to recompute
/// the failing comparison from scratch.
struct TheoremReport {
  std::string claim;     ///< stable id: "theorem2", "theorem3", ...
  std::string instance;  ///< description of the checked input
  std::vector<CheckedInequality> checks;
  Verdict verdict = Verdict::TruncationLimited;
  bool exact_mode = false;  ///< complete input: the claim itself is decided
  std::vector<std::pair<std::string, std::string>> counterexample;
  std::string note;
};

/// Checks that the span of even basis elements with certified nilpotent
/// adjoint action stays within the polydepth upper bound.  Complete
/// algebras are checked exactly (the bound collapses to the depth);
/// truncated ones get a window comparison.  d_bound caps the internal
/// degrees the depth scan visits; the overload without it uses the
/// default degree bound.
TheoremReport check_theorem2(const GradedLieAlgebra& L, int d_bound);
TheoremReport check_theorem2(const GradedLieAlgebra& L);

/// Evaluates three window verdicts that are claimed to travel together:
/// envelope growth at most polynomial, even part finite with cumulative
/// algebra dimensions within C*log2(n), and solvability; then reports
/// their pairwise consistency.  The overload taking a documented growth
/// degree additionally compares the measured envelope degree against it
/// and reports agreement or discrepancy, enforcing neither.
TheoremReport check_theorem3(const GradedLieAlgebra& L);
TheoremReport check_theorem3(const GradedLieAlgebra& L,
                             int documented_envelope_degree);

/// How solvability was settled for a window-bound report.
enum class Solvability {
  CertifiedSolvable,     ///< derived series vanishing is a theorem
  SolvableOnWindow,      ///< vanishes in the window, not certified
  NotSolvableOnWindow,   ///< caller knows the algebra is not solvable
  Unknown,
};

/// Scans, for each r in r_list, for the least k0 such that the degree
/// window sums satisfy sum_{i=k+1}^{k+d} dim L_i >= k^r for every k from
/// k0 to the truncation edge, and reports the k(r) table plus whether the
/// single width d served every tested r.  The claim concerns non-solvable
/// algebras of finite polydepth; solvable instances get a hypothesis note
/// and their expected window failures do not count against the claim.
/// The dimension-sequence overload serves algebras too large to
/// materialize; the caller supplies what it knows about solvability.
TheoremReport check_theorem5(const GradedLieAlgebra& L, int d,
                             const std::vector<int>& r_list);
TheoremReport check_theorem5(const DimensionSequence& lie_dims,
                             Solvability solvability, int d,
                             const std::vector<int>& r_list);

/// Direct-sum bounds: the number of components is at most the polydepth
/// of the sum, which is at most the sum of the component polydepths.  The
/// claim's hypothesis (non-solvable components) is reported alongside;
/// when it certifiably fails the bounds are still evaluated and reported
/// as measured values, and the claim holds vacuously.  Components must
/// share a field.
TheoremReport check_prop4(const std::vector<GradedLieAlgebra>& components,
                          int d_bound);
TheoremReport check_prop4(const std::vector<GradedLieAlgebra>& components);

/// Which substructure a subalgebra/ideal comparison should build.
struct SubSpec {
  enum class Kind {
    Ideal,                 ///< ideal closure of the named basis elements
    Subalgebra,            ///< bracket closure of the named basis elements
    TruncationIdealAbove,  ///< everything of degree > cut
  };
  Kind kind = Kind::Ideal;
  std::vector<std::string> generators;  ///< basis names (Ideal, Subalgebra)
  int cut = -1;                         ///< degree (TruncationIdealAbove)
  /// Optional basis name whose orbit under the subalgebra is measured for
  /// polynomial growth (Subalgebra only).
  std::string orbit_element;
};

/// Substructure comparisons: an ideal's polydepth never exceeds the
/// algebra's; a subalgebra whose orbits grow polynomially inherits a
/// finite polydepth bound.  The substructure is materialized as an
/// algebra in its own right and both sides are computed with the same
/// machinery.
TheoremReport check_prop1(const GradedLieAlgebra& L, const SubSpec& spec,
                          int d_bound);

}  // namespace gla
