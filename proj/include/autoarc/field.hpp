#pragma once

#include <gmpxx.h>

#include <string>

#include "autoarc/errors.hpp"

namespace autoarc {

/// Exact field element. Over the rationals this is an arbitrary mpq value;
/// over a prime field the canonical representative has denominator 1 and
/// numerator in [0, p).
using Coeff = mpq_class;

/// The coefficient field k: either Q or F_p with p < 2^31 prime.
/// All arithmetic is exact; there is no floating point anywhere.
class CoefficientField {
 public:
  static CoefficientField rationals();
  static CoefficientField prime_field(long p);

  long characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }

  /// Canonical representative (reduces mod p; mpq_class already keeps
  /// rationals in lowest terms).
  Coeff reduce(const Coeff& a) const;

  Coeff add(const Coeff& a, const Coeff& b) const { return reduce(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return reduce(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return reduce(a * b); }
  Coeff neg(const Coeff& a) const { return reduce(-a); }
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  Coeff from_long(long v) const { return reduce(Coeff(v)); }
  bool is_zero(const Coeff& a) const { return a == 0; }

  std::string to_string(const Coeff& a) const;

  bool operator==(const CoefficientField& o) const { return char_ == o.char_; }
  bool operator!=(const CoefficientField& o) const { return !(*this == o); }

 private:
  explicit CoefficientField(long ch) : char_(ch) {}
  long char_ = 0;
};

}  // namespace autoarc
