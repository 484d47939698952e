#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gla/error.hpp"

namespace gla {

using BigInt = mpz_class;

/// Degreewise dimension counts dim V_0 .. dim V_N of a graded vector space
/// of finite type, together with the explicit cutoff N.  Entries are exact
/// nonnegative integers of arbitrary size.  Reading past the cutoff is an
/// error, never a silent zero: beyond N the space is unknown, not empty.
class DimensionSequence {
 public:
  DimensionSequence() : truncation_(-1) {}

  DimensionSequence(std::vector<BigInt> dims, int truncation)
      : dims_(std::move(dims)), truncation_(truncation) {
    if (truncation_ < 0)
      fail(ErrorKind::BadInput, "truncation must be nonnegative");
    if (static_cast<int>(dims_.size()) != truncation_ + 1)
      fail(ErrorKind::BadInput,
           "dimension list must carry exactly truncation+1 entries");
    for (int i = 0; i <= truncation_; ++i)
      if (dims_[i] < 0)
        fail(ErrorKind::BadInput,
             "negative dimension at degree " + std::to_string(i));
  }

  static DimensionSequence zeros(int truncation) {
    return DimensionSequence(std::vector<BigInt>(truncation + 1, 0),
                             truncation);
  }

  int truncation() const { return truncation_; }

  const BigInt& at(int n) const {
    if (n < 0 || n > truncation_)
      fail(ErrorKind::Truncation,
           "degree " + std::to_string(n) + " is outside the known range [0, " +
               std::to_string(truncation_) + "]");
    return dims_[n];
  }

  void set(int n, BigInt v) {
    at(n);  // range check
    if (v < 0)
      fail(ErrorKind::BadInput,
           "negative dimension at degree " + std::to_string(n));
    dims_[n] = std::move(v);
  }

  const std::vector<BigInt>& raw() const { return dims_; }

  /// Largest degree with a nonzero entry, or -1 when all entries vanish.
  int last_nonzero() const {
    for (int n = truncation_; n >= 0; --n)
      if (dims_[n] != 0) return n;
    return -1;
  }

  bool operator==(const DimensionSequence& o) const {
    return truncation_ == o.truncation_ && dims_ == o.dims_;
  }

 private:
  std::vector<BigInt> dims_;
  int truncation_;
};

}  // namespace gla
