#pragma once

#include <optional>

#include "autoarc/groebner.hpp"

namespace autoarc {

/// Element of a free module R^rank with polynomial components.
class VectorPoly {
 public:
  VectorPoly(PolyRing ring, size_t rank)
      : ring_(std::move(ring)),
        comps_(rank, Polynomial::zero(ring_)) {}
  VectorPoly(PolyRing ring, std::vector<Polynomial> comps);

  static VectorPoly unit(const PolyRing& ring, size_t rank, size_t pos);

  const PolyRing& ring() const { return ring_; }
  size_t rank() const { return comps_.size(); }
  const Polynomial& comp(size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& comps() const { return comps_; }
  bool is_zero() const;

  /// Position-over-term lead: the first nonzero component (positions with
  /// smaller index rank higher), then that component's leading term.
  size_t lead_pos() const;

  VectorPoly operator+(const VectorPoly& o) const;
  VectorPoly operator-(const VectorPoly& o) const;
  VectorPoly mul_term(const Monomial& m, const Coeff& c) const;
  VectorPoly mul_poly(const Polynomial& p) const;
  VectorPoly monic() const;

  bool operator==(const VectorPoly& o) const { return comps_ == o.comps_; }

 private:
  PolyRing ring_;
  std::vector<Polynomial> comps_;
};

/// Finitely generated submodule of a free module R^rank.
class Submodule {
 public:
  Submodule(PolyRing ring, size_t rank, std::vector<VectorPoly> gens);

  const PolyRing& ring() const { return ring_; }
  size_t rank() const { return rank_; }
  const std::vector<VectorPoly>& gens() const { return gens_; }

 private:
  PolyRing ring_;
  size_t rank_;
  std::vector<VectorPoly> gens_;
};

/// Reduced module Groebner basis under position-over-term order with the
/// ring's order on monomials.
std::vector<VectorPoly> module_groebner(const Submodule& M);

VectorPoly module_normal_form(const VectorPoly& v,
                              const std::vector<VectorPoly>& G);

bool module_membership(const VectorPoly& v, const std::vector<VectorPoly>& G);

struct SyzygyResult {
  std::vector<VectorPoly> gb;  // reduced module GB of M
  Submodule syzygies;          // rank = #gens(M); s with sum s_i g_i = 0
};

/// Module GB together with generators of the syzygy module of M's generators
/// (computed by the extended free-module elimination trick; Schreyer-style
/// S-pair bookkeeping).
SyzygyResult module_groebner_and_syzygies(const Submodule& M);

}  // namespace autoarc
