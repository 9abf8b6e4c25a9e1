#pragma once

#include "autoarc/module.hpp"

namespace autoarc {

/// Subquotient presentation gens/rels inside a free module; the relations
/// submodule is contained in the span of the generators.
struct SubquotientModule {
  std::vector<VectorPoly> gens;
  std::vector<VectorPoly> rels;

  /// Zero iff every generator lies in the relation submodule.
  bool is_zero() const;
};

/// i-th Koszul homology of the sequence `seq` with coefficients in the module
/// PRESENTED by M, i.e. coker(M) = R^rank / M. Matches the CAS convention
/// where a module argument stands for its cokernel.
SubquotientModule koszul_homology(const std::vector<Polynomial>& seq,
                                  const Submodule& M, size_t i);

/// Depth of coker(M) at the ideal generated by `seq` (normally the full list
/// of ring variables), via the first vanishing Koszul homology: scanning
/// i = 1..n, returns n-i+1 at the first i with H_i = 0, and 0 if none vanish.
int depth(const Submodule& M, const std::vector<Polynomial>& seq);

struct CohenMacaulayResult {
  bool is_cm = false;
  int depth_value = 0;
  int dimension = 0;
  bool graded_input = true;  // false when the graded criterion was applied to
                             // non-graded generators
};

/// depth(R/I at the irrelevant ideal) == dim(R/I).
CohenMacaulayResult cohen_macaulay_test(const Ideal& I);

struct TorResult {
  Ideal numerator;        // I intersect J
  Ideal denominator;      // I*J
  Ideal annihilator;      // (I*J) : (I intersect J)
  int support_dimension;  // dim R/annihilator; -1 when the module is zero
  bool is_zero;
};

/// Tor_1(R/J, R/I) presented as (I cap J)/(I*J).
TorResult tor_one(const Ideal& I, const Ideal& J);

}  // namespace autoarc
