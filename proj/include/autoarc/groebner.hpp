#pragma once

#include <map>
#include <string>

#include "autoarc/ideal.hpp"

namespace autoarc {

/// Reduced Groebner basis of I under its ring's order (memoized on the
/// ideal). The reference is tied to the ideal's lifetime, so rvalues are
/// rejected at compile time.
const GroebnerBasis& groebner_basis(const Ideal& I);
const GroebnerBasis& groebner_basis(Ideal&&) = delete;

/// Unique remainder of f modulo G: no term divisible by a leading monomial.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_membership(const Polynomial& f, const Ideal& I);

/// Rabinowitsch trick: f in rad(I) iff 1 in I + (1 - w*f).
bool radical_membership(const Polynomial& f, const Ideal& I);

/// I intersected with k[keep], via a block order ranking the eliminated
/// variables highest. The result lives in a fresh ring on `keep` (original
/// relative order, original order kind).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep);

/// I : f^infinity via eliminate(I + (1 - w*f), original variables).
Ideal saturate(const Ideal& I, const Polynomial& f);

Ideal intersect(const Ideal& I, const Ideal& J);

/// I : J. By convention I : (0) = (1).
Ideal quotient(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// Krull dimension of R/I via the maximal independent set of the initial
/// ideal. Returns -1 for the unit ideal. Guarded at 24 variables.
int krull_dimension(const Ideal& I);
inline constexpr size_t kMaxDimensionVars = 24;

enum class RadicalStatus { CertifiedRadical, Unknown };

struct RadicalCertificate {
  RadicalStatus status = RadicalStatus::Unknown;
  std::string reason;  // which sufficient condition fired
};

/// Sufficient-condition radical test: squarefree initial ideal, or an
/// equidimensional complete intersection whose singular locus has strictly
/// smaller dimension.
RadicalCertificate radical_certificate(const Ideal& I);

/// Image of I under substituting field constants for the bound variables.
/// The result lives in a fresh ring on the remaining variables.
Ideal specialize(const Ideal& I, const std::map<std::string, Coeff>& bindings);

/// Transport an ideal to another ring by matching variable names.
Ideal transport(const Ideal& I, const PolyRing& target);

/// Exact division f / g; throws InvariantError if not exact.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace autoarc
