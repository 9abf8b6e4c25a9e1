#include "autoarc/field.hpp"

namespace autoarc {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

CoefficientField CoefficientField::rationals() { return CoefficientField(0); }

CoefficientField CoefficientField::prime_field(long p) {
  if (p >= (1L << 31) || !is_prime(p))
    throw UnsupportedError("characteristic must be 0 or a prime < 2^31, got " +
                           std::to_string(p));
  return CoefficientField(p);
}

Coeff CoefficientField::reduce(const Coeff& a) const {
  if (char_ == 0) return a;
  // Prime-field elements are kept as integers in [0, p).
  mpz_class num = a.get_num();
  mpz_class den = a.get_den();
  mpz_class p(char_);
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw InvariantError("denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r = num % p;
  if (r < 0) r += p;
  return Coeff(r);
}

Coeff CoefficientField::inv(const Coeff& a) const {
  if (a == 0) throw InvariantError("division by zero in coefficient field");
  if (char_ == 0) return 1 / a;
  mpz_class num = reduce(a).get_num();
  mpz_class p(char_), r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw InvariantError("element not invertible mod p");
  return Coeff(r);
}

Coeff CoefficientField::div(const Coeff& a, const Coeff& b) const {
  return mul(a, inv(b));
}

std::string CoefficientField::to_string(const Coeff& a) const {
  return reduce(a).get_str();
}

}  // namespace autoarc
