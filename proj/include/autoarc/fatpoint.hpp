#pragma once

#include "autoarc/groebner.hpp"

namespace autoarc {

/// A fat point Z: finite-dimensional local algebra over k with an explicit
/// standard-monomial basis and multiplication table. The basis always starts
/// with 1 and is sorted by degree, then lexicographically in the declared
/// germ-variable order.
class FatPoint {
 public:
  const PolyRing& germ_ring() const { return germ_ring_; }
  const std::vector<std::string>& germ_vars() const {
    return germ_ring_.vars();
  }
  const Ideal& defining_ideal() const { return defining_ideal_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  size_t length() const { return basis_.size(); }
  int order() const { return order_; }
  bool is_linear_jet() const { return linear_jet_; }

  /// Structure constants: basis[i] * basis[j] = sum_m table(i,j)[m] basis[m].
  const std::vector<Coeff>& table(size_t i, size_t j) const {
    return table_[i * basis_.size() + j];
  }

  /// Indices of the degree-1 basis elements (the images of the germ
  /// variables in m/m^2 when the germ ideal sits inside m^2).
  std::vector<size_t> degree_one_indices() const;

  friend FatPoint make_linear_jet(int n, const CoefficientField& field,
                                  const std::string& var);
  friend FatPoint make_germ_jet(const std::vector<std::string>& germ_vars,
                                const Ideal& germ_ideal, int n);

 private:
  FatPoint(PolyRing germ_ring, Ideal defining_ideal,
           std::vector<Monomial> basis, int order, bool linear);
  void build_table();

  PolyRing germ_ring_;
  Ideal defining_ideal_;
  std::vector<Monomial> basis_;
  std::vector<std::vector<Coeff>> table_;
  int order_;
  bool linear_jet_;
};

/// Z_n = Spec k[t]/(t^(n+1)): basis {1, t, ..., t^n}, length n+1.
FatPoint make_linear_jet(int n,
                         const CoefficientField& field =
                             CoefficientField::rationals(),
                         const std::string& var = "t");

/// n-th order jet of a germ at the origin: basis = standard monomials of
/// GB(germ_ideal + m^(n+1)), multiplication by normal form. The germ ideal
/// must vanish at the origin.
FatPoint make_germ_jet(const std::vector<std::string>& germ_vars,
                       const Ideal& germ_ideal, int n);

/// Verifies identity, commutativity, associativity and nilpotency of the
/// table. Used as a runtime invariant check and as a negative-control hook.
bool multiplication_table_check(const FatPoint& Z);

/// Raw table check on explicit structure constants (for corrupted-table
/// negative controls in tests).
bool multiplication_table_check(const FatPoint& Z,
                                const std::vector<std::vector<Coeff>>& table);

}  // namespace autoarc
