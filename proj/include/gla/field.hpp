#pragma once

#include <gmpxx.h>

#include <string>

#include "gla/error.hpp"

namespace gla {

/// Exact scalar.  Over the rationals this is an arbitrary mpq in canonical
/// form; over a prime field it is an integer in [0, p) with denominator 1.
using Scalar = mpq_class;

/// Coefficient field: the rationals, or a prime field of odd order.
/// Characteristic 2 is rejected everywhere — the sign conventions of the
/// bracket need 2 invertible.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(unsigned long p);

  Kind kind() const { return kind_; }
  unsigned long characteristic() const {
    return kind_ == Kind::Rationals ? 0 : p_;
  }
  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }

  /// Parse "n", "-n" or "n/d" (decimal).  Over F_p the denominator is
  /// inverted mod p.
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return a == 0; }

  /// Canonical representative (mod-p reduction when applicable).
  Scalar reduce(const Scalar& a) const;

 private:
  Field(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

}  // namespace gla
