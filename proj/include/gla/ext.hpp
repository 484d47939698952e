#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gla/ce.hpp"
#include "gla/envelope.hpp"
#include "gla/module.hpp"
#include "gla/series.hpp"

namespace gla {

/// Largest internal degree a word of exactly q suspended letters can reach:
/// letters of even Lie degree appear at most once, letters of odd Lie
/// degree may repeat.  Words shorter than q (when the supply of exterior
/// letters runs out) are bounded by the same sum.  Zero for q <= 0.
int max_word_degree(const GradedLieAlgebra& L, int q);

/// Default internal-degree ceiling for nonvanishing searches: the sum of
/// all basis degrees of L, plus the top degree of M, plus twice the largest
/// basis degree of L.  Reaches the socle degrees of exterior directions and
/// the dualizing degrees of polynomial directions with room to spare.
int default_degree_bound(const GradedLieAlgebra& L, const GradedModule& M);

/// Default homological ceiling for grade searches: the number of
/// even-degree basis elements of L plus two.  The least nonvanishing
/// cohomological degree of the finite-dimensional suite sits at the count
/// of even basis elements, so this leaves a margin of two levels.
int default_homological_bound(const GradedLieAlgebra& L);

/// Dimensions of Ext^q over the enveloping algebra, of M against the
/// enveloping algebra itself, per internal degree d (which may be
/// negative: d is the degree shift of a homogeneous map into the
/// envelope).
///
/// Realization: the envelope-valued cochain complex on words-of-suspended-
/// letters tensor M is the linear dual of the chain complex whose
/// coefficients are the dual of (dual of M) tensor (envelope window), so
/// its cohomology dimensions are homology dimensions of that chain
/// complex, with the internal degree reflected by a fixed offset.  Witness
/// cocycles come from the transposed boundaries and are re-verified
/// explicitly.
///
/// The envelope window is sized so that every cochain and differential
/// with q <= q_bound and d <= d_bound is assembled from fully known data;
/// when the algebra's own truncation cannot host that window the
/// computation still runs but is flagged window_limited and its verdicts
/// are candidates, not exact claims.
class ExtAgainstEnvelope {
 public:
  ExtAgainstEnvelope(const GradedLieAlgebra& L, const GradedModule& M,
                     int q_bound, int d_bound);

  int q_bound() const { return q_bound_; }
  int d_bound() const { return d_bound_; }
  /// Most negative internal degree whose ranks the window certifies.
  int degree_floor() const { return offset_ - C_.d_max(); }
  /// Smallest internal degree where a q-cochain can exist at all.
  int lowest_degree(int q) const;
  int envelope_truncation() const { return env_trunc_; }
  bool window_limited() const { return window_limited_; }
  const std::string& note() const { return note_; }

  /// dim Ext^q at internal degree d; exact when not window_limited.
  /// Degrees below lowest_degree(q) are genuinely zero; degrees between
  /// the window floor and that line are unreachable and raise Truncation.
  BigInt dim(int q, int d) const;

  /// Whether dim(q, d) is certified exact by the windows: every cochain
  /// and rank it involves touches envelope degrees at most
  /// d + (top of M) + max_word_degree(q+1), so when that fits inside the
  /// envelope window and both the algebra and the module are complete,
  /// the truncated answer is the true one even if other bidegrees were
  /// cut.  An incomplete algebra certifies nothing: its missing basis
  /// directions could enter every rank.
  bool exact_at(int q, int d) const;

  /// Whether internal degree d sits so close to the top of the envelope
  /// window that even the one-letter cocycle constraints escape it.
  /// Classes there are typically truncation artifacts (the cut envelope
  /// grows a fake socle), so candidate scans treat the zone as a last
  /// resort.  A complete envelope clips nothing.
  bool constraints_clipped(int d) const {
    return !env_complete_ && d + top_m_ + min_letter_ > env_trunc_;
  }

  /// All nonzero dimensions of Ext^q in the scanned degree window.
  std::map<int, BigInt> dims_at(int q) const;

  /// A representative cocycle at (q, d), as labeled coordinates on the
  /// chain basis of the underlying complex.  It is re-verified to pair to
  /// zero with every boundary from level q+1 and to lie outside the row
  /// span of the level-q boundary; failure of either re-check is an
  /// internal error.  Requires dim(q, d) > 0.
  std::vector<std::pair<std::string, Scalar>> witness(int q, int d) const;

 private:
  Field field_ = Field::rationals();
  int q_bound_ = 0;
  int d_bound_ = 0;
  int top_m_ = 0;
  int env_trunc_ = 0;
  int offset_ = 0;  // stored internal degree = offset_ - d
  int min_letter_ = 0;
  bool L_complete_ = true;
  bool M_complete_ = true;
  bool env_complete_ = false;
  bool window_limited_ = false;
  std::string note_;
  std::vector<int> emax_;  // emax_[q] = max_word_degree(L, q), q <= q_bound+1
  ChainComplex C_;
};

/// Least nonvanishing Ext level against the envelope, with a re-verified
/// witness, or a lower bound when the scan exhausts its window.
///
/// The scan walks levels upward and certifies each bidegree it can
/// (exact_at); a witness found in a certified bidegree is a true
/// nonvanishing class even when other zones were window-cut, so value is
/// then a sound upper bound, and it is exact when every bidegree scanned
/// before the witness was certified zero.  If only uncertified bidegrees
/// show classes, the best one is reported as a phantom-risk candidate.
struct DepthCertificate {
  bool found = false;    ///< a nonvanishing bidegree was located
  bool exact = false;    ///< all bidegrees up to the witness were certified
  int value = -1;        ///< least q with Ext^q != 0 (meaningful when found)
  int at_least = 0;      ///< levels below this are certified zero in window
  int degree = 0;        ///< internal degree of the witness (may be negative)
  bool witness_certified = false;  ///< witness bidegree itself is window-exact
  std::vector<std::pair<std::string, Scalar>> cocycle;  ///< labeled witness
  int q_scanned = 0;     ///< homological ceiling scanned
  int d_bound = 0;       ///< internal-degree ceiling scanned
  int d_low = 0;         ///< internal-degree floor scanned
  bool window_limited = false;
  std::string note;
};

/// dims of Ext^q(M, envelope) per internal degree <= d_bound (nonzero
/// entries only; degrees below the cochain floor are genuinely zero).
std::map<int, BigInt> ext_against_envelope(const GradedLieAlgebra& L,
                                           const GradedModule& M, int q,
                                           int d_bound);

/// The same dimensions computed from the chain side, as the homology of
/// the complex with coefficients M tensor (dual of the envelope window) —
/// assembled without the double dual and with the opposite tensor order,
/// so agreement with ext_against_envelope crosses two independent sign and
/// shift bookkeepings.  Keyed by the same internal-degree convention.
std::map<int, BigInt> ext_dims_from_chain_side(const GradedLieAlgebra& L,
                                               const GradedModule& M, int q,
                                               int d_bound);

/// Least q with Ext^q(M, envelope) != 0, scanned over q <= q_bound and the
/// window of internal degrees; defaults per default_degree_bound and
/// default_homological_bound.
DepthCertificate grade(const GradedLieAlgebra& L, const GradedModule& M,
                       int d_bound, int q_bound);
DepthCertificate grade(const GradedLieAlgebra& L, const GradedModule& M);

/// grade of the one-dimensional trivial module: the depth of the
/// enveloping algebra.  Exact for complete (finite-dimensional) algebras
/// with a sufficient truncation; otherwise a flagged candidate.
DepthCertificate depth(const GradedLieAlgebra& L, int d_bound, int q_bound);
DepthCertificate depth(const GradedLieAlgebra& L);

/// grade + growth data: the polygrade of M and the resulting bracket on
/// the least polygrade over all modules.
struct PolygradeReport {
  DepthCertificate grade_part;   ///< grade(L, M)
  GrowthReport module_growth;    ///< growth of dim M_n on the window
  bool module_finite = false;    ///< complete M: growth degree 0 exactly
  bool polybd_known = false;     ///< a polynomial degree for M is available
  int polybd = -1;               ///< exact 0 when module_finite, else windowed
  bool polygrade_known = false;
  int polygrade = -1;            ///< grade + polybd when both available
  GrowthReport envelope_growth;  ///< growth of dim (envelope)_n on the window
  bool depth_known = false;      ///< depth of the envelope was certified
  int depth_value = -1;
  bool depth_exact = false;
  /// Bracket on the least polygrade over all modules: it is bounded above
  /// by the polygrade of M, by the depth (the trivial module's polygrade),
  /// and by the envelope growth degree (the envelope's own polygrade).
  /// For a complete algebra the trivial module attains the least value, so
  /// the bracket collapses to the depth.
  bool polydepth_exact = false;
  int polydepth_lower = 0;
  bool polydepth_upper_known = false;
  int polydepth_upper = -1;
  bool polydepth_upper_exact = false;
  bool window_limited = true;
  std::string note;
};

PolygradeReport polygrade_report(const GradedLieAlgebra& L,
                                 const GradedModule& M, int d_bound,
                                 Window growth_window);

}  // namespace gla
