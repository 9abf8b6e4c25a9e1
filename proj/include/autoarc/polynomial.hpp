#pragma once

#include <map>
#include <string>
#include <vector>

#include "autoarc/ring.hpp"

namespace autoarc {

struct Term {
  Monomial mon;
  Coeff coeff;
};

/// Resource guards: operations that would produce larger objects abort with a
/// ResourceError instead of thrashing.
inline constexpr uint32_t kMaxTotalDegree = 512;
inline constexpr size_t kMaxTerms = 1'000'000;

/// Immutable sparse polynomial in canonical form: terms strictly decreasing in
/// the ring's order, no zero coefficients, no duplicate monomials. The zero
/// polynomial has an empty term list.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms);
  static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }
  static Polynomial constant(const PolyRing& ring, const Coeff& c);
  static Polynomial variable(const PolyRing& ring, size_t index);
  static Polynomial monomial_poly(const PolyRing& ring, Monomial m,
                                  const Coeff& c);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mon; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }
  uint32_t total_degree() const;  // 0 for the zero polynomial

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
  }
  /// Nonzero constant (a unit) generates the whole ring.
  bool is_unit_constant() const {
    return terms_.size() == 1 && terms_[0].mon.is_one();
  }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial mul_scalar(const Coeff& c) const;
  Polynomial pow(uint32_t k) const;
  /// Monic rescale (leading coefficient 1). Zero stays zero.
  Polynomial monic() const;

  /// Formal partial derivative d/d(var index), characteristic-aware.
  Polynomial derivative(size_t var_index) const;

  /// Degree in a single variable.
  uint32_t degree_in(size_t var_index) const;
  bool uses_var(size_t var_index) const { return degree_in(var_index) > 0; }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Strict total ordering for canonical sorting of polynomial lists
  /// (compares term by term under the ring order).
  static int compare(const Polynomial& a, const Polynomial& b);

 private:
  void check_guards() const;
  PolyRing ring_;
  std::vector<Term> terms_;
};

/// Ring homomorphism induced by variable bindings. Unbound variables map to
/// the same-named variable of the target ring (which must exist). Targets of
/// bindings live in `target`.
Polynomial ring_map(const Polynomial& f, const PolyRing& target,
                    const std::map<std::string, Polynomial>& bindings);

/// Entry (i,j) = d polys[i] / d vars[j], formal and characteristic-aware.
std::vector<std::vector<Polynomial>> jacobian_matrix(
    const std::vector<Polynomial>& polys, const std::vector<size_t>& var_indices);

/// Determinant by cofactor expansion (desk-scale matrices).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> index_subsets(size_t n, size_t k);

}  // namespace autoarc
