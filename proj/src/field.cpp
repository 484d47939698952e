#include "gla/field.hpp"

namespace gla {

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (p == 2)
    fail(ErrorKind::BadInput,
         "field F_2 is not supported: the characteristic must differ from 2");
  if (!is_prime(p))
    fail(ErrorKind::BadInput,
         "field order " + std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

Scalar Field::reduce(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return a;
  // Canonical form in F_p: clear the denominator, reduce into [0, p).
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class dmod = den % p;
  if (dmod < 0) dmod += p;
  if (dmod == 0)
    fail(ErrorKind::BadInput, "denominator divisible by the field order");
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorKind::Internal, "modular inverse failed");
  mpz_class r = (num % p) * dinv % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(reduce(a))) fail(ErrorKind::BadInput, "division by zero");
  if (kind_ == Kind::Rationals) return 1 / a;
  return reduce(Scalar(1) / a);
}

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) fail(ErrorKind::BadInput, "empty coefficient");
  auto check_digits = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!check_digits(num) || !check_digits(den) || den[0] == '-')
    fail(ErrorKind::BadInput, "bad coefficient literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorKind::BadInput, "zero denominator in '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return reduce(q);
}

std::string Field::to_string(const Scalar& a) const {
  Scalar c = reduce(a);
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace gla
