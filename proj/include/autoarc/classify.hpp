#pragma once

#include "autoarc/geometry.hpp"

namespace autoarc {

enum class DeformationClass { VeryStrong, Strong, Weak };

struct StrengthVerdict {
  DeformationClass cls = DeformationClass::Weak;
  /// Per endomorphism variable: does it lie in rad(I_V)?
  std::vector<std::pair<std::string, bool>> witnesses;
  /// Determinant of the linear-part coefficient matrix on m/m^2 in rad(I_V)
  /// (the closed condition cutting the non-automorphism locus B_Z).
  bool det_membership = false;
  std::string failing_var;  // first failing witness when weak
  bool vacuous = false;     // V empty
};

/// Strong/weak classification of the deformation behind S. V = preimage of
/// X_sing under pi. Very strong: V inside theta^-1(O). Strong: V inside
/// theta^-1(B_Z). Over linear jets the two notions coincide and the verdict
/// is reported as "strong".
StrengthVerdict classify_deformation(const ArcSystem& S, const Ideal& X_sing);

struct DefectRow {
  int n = 0;
  long length = 0;            // l(Z_n)
  long delta = 0;             // dim A_{Z_n}
  long dim_arc = 0;           // dim A_{Z_n}(Y_n)
  std::optional<long> dim_v;  // dim of pi^-1(X_sing); empty when V is empty
  long d = 0;                 // dim X
  std::optional<mpq_class> phi;     // dimV/l - d
  std::optional<mpq_class> dstar;   // dimA/l - d
  std::optional<mpq_class> e_term;  // delta/l
  std::optional<mpq_class> r_term;  // (dimA - d*l)/delta
  std::optional<bool> validated;    // flatness of Y_n over Z_n
  std::string fingerprint;          // family fingerprint
};

struct GermSpec {
  std::vector<std::string> vars;
  Ideal ideal;
};

/// One row per jet order: lengths, dimensions and the normalized defect
/// invariants. No limits are asserted; the report prints sequences and
/// monotonicity flags only.
std::vector<DefectRow> defect_table(const DeformationFamily& family, int n_min,
                                    int n_max,
                                    const std::optional<GermSpec>& germ = {});

/// Weak-curve dimension bound n+2 <= dim V_n <= 2n. The purity and
/// irreducibility flags are the caller-supplied hypotheses of the bound.
bool check_weak_curve_bounds(const DefectRow& row, bool purity,
                             bool irreducible);

struct MotivicTerm {
  std::string tag;   // symbolic class, e.g. "[V_2]"
  long coefficient;  // integer multiplicity
  long dim_tag;      // dimension of the tagged class
  long power;        // power of L
  long virtual_dimension() const { return dim_tag + power; }
};

struct MotivicExpr {
  std::vector<MotivicTerm> terms;

  long virtual_dimension() const;  // max over terms; minimal long when empty
  MotivicExpr plus(const MotivicExpr& o) const;   // merges like terms
  MotivicExpr shift(long k) const;                // multiply by L^k
};

struct MotivicSequence {
  std::vector<MotivicExpr> exprs;
  /// Normalized virtual dimensions dimV_n - d*l_n - delta_n of the singular
  /// terms, one per row with nonempty V.
  std::vector<long> singular_virtual_dims;
  /// True iff the singular-part sequence is strictly decreasing (vacuously
  /// true with at most one term).
  bool convergence = true;
};

MotivicSequence motivic_sequence(const std::vector<DefectRow>& rows);

}  // namespace autoarc
