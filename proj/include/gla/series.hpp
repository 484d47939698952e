#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gla/dim_sequence.hpp"

namespace gla {

/// Degree window [lo, hi] on which growth statements are made.  Verdicts
/// derived from a window are window-limited by construction: they certify
/// inequalities on the data seen, never asymptotics.
struct Window {
  int lo = 0;
  int hi = 0;
};

/// Result of the polynomial-growth estimator.
struct GrowthReport {
  enum class Verdict { PolynomialLe, SuperpolynomialOnWindow, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  int degree = -1;                ///< d in "cumulative <= C * n^d": certified
                                  ///< (PolynomialLe) or escaped (Superpoly...)
  mpq_class witness_constant;     ///< exact C certified on the window
  double fitted_exponent = 0.0;   ///< diagnostic log-log slope; never certified
  Window window;
  bool window_limited = true;     ///< always true; kept explicit in output
  int failing_n = -1;             ///< first second-half point escaping the bound
  std::string note;
};

/// Result of the "cumulative dims within C*log2(n)" test.
struct Log2BoundReport {
  bool holds = false;
  /// The minimal constant is cumulative[arg_n] / log2(arg_n), reported
  /// symbolically (numerator and the n whose log realizes it) plus a
  /// floating diagnostic value.
  BigInt constant_numerator;
  int constant_log_arg = 0;
  double constant_approx = 0.0;
  int failing_n = -1;  ///< smallest second-half degree exceeding the fit
  Window fit_window, test_window;
};

/// Result of the degree-window lower-bound scan
/// (sum_{i=k+1}^{k+d} dims[i] >= k^r).
struct WindowBoundReport {
  bool found = false;
  int k0 = -1;               ///< least k0 making the bound hold for all k >= k0
  int first_violation = -1;  ///< smallest violating k (when any)
  int last_violation = -1;   ///< largest violating k (when any)
  int k_max = -1;            ///< last k that could be tested: truncation - d
};

/// Result of the enveloping-algebra exponential lower-bound check.
struct ExponentialCheckReport {
  bool holds = false;
  int n = 0;
  BigInt cumulative_lie;       ///< d(n) = sum_{i<=n} dim L_i
  BigInt cumulative_envelope;  ///< sum_{i <= n*d(n)} dim UL_i
  BigInt required;             ///< 2^{d(n)}
};

/// Hilbert series of the universal envelope of a graded Lie algebra with the
/// given degreewise dimensions: each odd degree i contributes (1 + t^i) per
/// basis element, each even degree i contributes 1/(1 - t^i).  dims[0] must
/// be 0.  The result carries the same truncation.
DimensionSequence pbw_series(const DimensionSequence& lie_dims);

/// Inverse transform: recover the unique graded-Lie dimension sequence whose
/// envelope has the given series (dims[0] must be 1).  Proceeds degree by
/// degree; a degree forcing a negative dimension raises an error naming it.
DimensionSequence inverse_pbw(const DimensionSequence& algebra_dims);

/// Partial sums: out[n] = sum_{i<=n} dims[i].
DimensionSequence cumulative(const DimensionSequence& dims);

/// Windowed polynomial-bound estimator for cumulative growth.  Requires at
/// least 8 sample points inside the truncation.  Counts that vanish before
/// the window's end earn the degree-0 verdict (and only those do).
/// Otherwise the candidate exponent and constant are fitted on the first
/// half of the window and must survive the second half; a bound tuned on
/// all the data would certify nothing.
GrowthReport polybd_estimate(const DimensionSequence& dims, Window window);

/// Tests cumulative[n] <= C * log2(n) for 2 <= n <= N with C fitted on the
/// first half of the range and checked on the second half.  All comparisons
/// are exact integer comparisons of n^a against m^b.  Needs N >= 4.
Log2BoundReport log2_bound_check(const DimensionSequence& dims);

/// Least k0 with sum_{i=k+1}^{k+d} dims[i] >= k^r for all k0 <= k <= N-d.
/// Requires d >= 1 and r >= 1.
WindowBoundReport theorem5_window(const DimensionSequence& dims, int d, int r);

/// Checks sum_{i <= n*d(n)} dim(UL)_i >= 2^{d(n)} where d(n) is the
/// cumulative Lie dimension at n.  Needs lie_dims known up to n*d(n).
ExponentialCheckReport pbw_exponential_check(const DimensionSequence& lie_dims,
                                             int n);

}  // namespace gla
