#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "autoarc/polynomial.hpp"

namespace autoarc {

class GroebnerBasis;

/// Finitely generated ideal. Zero generators are dropped at construction;
/// values are immutable. A reduced Groebner basis is memoized per ideal.
class Ideal {
 public:
  Ideal(PolyRing ring, std::vector<Polynomial> gens);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  static Ideal zero(const PolyRing& ring) { return Ideal(ring, {}); }
  static Ideal unit(const PolyRing& ring);

  bool operator==(const Ideal& o) const;  // equality of Groebner bases

 private:
  friend const GroebnerBasis& groebner_basis(const Ideal&);
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<GroebnerBasis> gb_cache_;
};

/// Reduced Groebner basis: monic elements, auto-reduced, sorted increasing by
/// leading monomial. Unique for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].is_unit_constant();
  }
  bool is_zero_ideal() const { return elements_.empty(); }

 private:
  PolyRing ring_;
  std::vector<Polynomial> elements_;
};

}  // namespace autoarc
