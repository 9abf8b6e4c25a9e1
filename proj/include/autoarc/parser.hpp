#pragma once

#include <functional>
#include <map>
#include <string>

#include "autoarc/polynomial.hpp"

namespace autoarc {

/// Parses the polynomial grammar: integer literals, variables
/// [A-Za-z][A-Za-z0-9_]*, operators + - * ^ (^ binds tightest, then *, then
/// +/-), parentheses, unary minus, no implicit multiplication, whitespace
/// insignificant. Rational constants p/q are accepted so that rendered output
/// always parses back.
Polynomial parse_polynomial(const std::string& text, const PolyRing& ring);

struct RenderOptions {
  /// Variable display names; defaults to the ring's names.
  std::map<std::string, std::string> names;
  /// Optional term comparator (a "greater than" predicate on monomials);
  /// defaults to the ring order.
  std::function<bool(const Monomial&, const Monomial&)> term_greater;
};

/// Canonical rendering: terms in decreasing order, signs absorbed into
/// coefficients, exponent 1 omitted, explicit `*` between factors.
/// parse(render(f)) == f.
std::string render_polynomial(const Polynomial& f);
std::string render_polynomial(const Polynomial& f, const RenderOptions& opts);

}  // namespace autoarc
