#pragma once

#include <optional>

#include "autoarc/fatpoint.hpp"

namespace autoarc {

/// An affine family F_i(x; t) over the fat point's parameters. The central
/// fiber is cut out by F_i(x; 0).
class DeformationFamily {
 public:
  DeformationFamily(std::vector<std::string> x_vars,
                    std::vector<std::string> t_params,
                    std::vector<Polynomial> polys);

  const PolyRing& family_ring() const { return family_ring_; }
  const std::vector<std::string>& x_vars() const { return x_vars_; }
  const std::vector<std::string>& t_params() const { return t_params_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const PolyRing& x_ring() const { return x_ring_; }
  /// Ideal of X = Y x_Z S, i.e. the F_i with all parameters set to zero.
  const Ideal& central_fiber() const { return central_fiber_; }
  /// Hash key of the rendered polynomials (tables are keyed by it).
  std::string fingerprint() const;

 private:
  std::vector<std::string> x_vars_, t_params_;
  PolyRing family_ring_;
  PolyRing x_ring_;
  std::vector<Polynomial> polys_;
  Ideal central_fiber_;
};

struct ArcVarInfo {
  bool is_endo = false;
  size_t coord = 0;        // 1-based x-coordinate i or parameter j
  size_t basis_index = 0;  // 1-based index into the fat-point basis
};

struct RawCoefficient {
  enum class Source { Family, FatPointIdeal };
  Source source;
  size_t poly_index;   // index of F_i or of the defining-ideal generator
  size_t basis_index;  // 1-based basis index m
  Polynomial coeff;
};

struct ReducedIdeal {
  Ideal ideal;  // in a possibly smaller ring
  std::vector<std::string> eliminated;
  RadicalCertificate certificate;
};

struct ReducedIdealLight {
  Ideal ideal;
  std::vector<std::string> eliminated;
};

/// The auto-arc system: coefficient ring, reduced defining ideal, variable
/// role map and provenance. Variable naming is the external contract:
/// x-coordinate i with basis index m -> a_i_m; parameter j with basis index
/// m >= 2 -> e_j_m (endomorphism constant terms are omitted a priori).
class ArcSystem {
 public:
  const PolyRing& full_ring() const { return full_ring_; }
  const PolyRing& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  const Ideal& raw_ideal() const { return raw_ideal_; }
  const std::vector<RawCoefficient>& raw_coefficients() const { return raw_; }

  const std::vector<std::string>& x_coeff_vars() const { return x_coeff_vars_; }
  const std::vector<std::string>& endo_vars() const { return endo_vars_; }
  const std::vector<std::string>& constant_vars() const {
    return constant_vars_;
  }
  /// Variables of the base of theta; defaults to the endomorphism block.
  const std::vector<std::string>& base_vars() const { return base_vars_; }
  /// Fiber variables: ring variables not in the base.
  std::vector<std::string> fiber_vars() const;
  const ArcVarInfo& var_info(const std::string& name) const;

  const FatPoint& fat_point() const;
  const DeformationFamily& family() const;
  bool has_family() const { return family_.has_value(); }

  /// Lazily computed and memoized (the certificate can cost a Groebner
  /// basis plus Jacobian minors).
  const RadicalCertificate& radical() const;
  const std::vector<std::string>& eliminated() const { return eliminated_; }
  /// canonical name -> paper-style alias (only when one exists)
  const std::vector<std::pair<std::string, std::string>>& alias_map() const {
    return alias_;
  }

  /// The trivial-endomorphism point O: all base variables = 0.
  std::map<std::string, Coeff> origin_point() const;

  /// Re-designate the base block (e.g. analysing a tangent bundle over the
  /// arc coefficients of a distinguished coordinate).
  ArcSystem with_base_variables(std::vector<std::string> base) const;

  friend ArcSystem build_arc_system(const DeformationFamily& Y,
                                    const FatPoint& Z);
  friend ArcSystem build_endo_system(const FatPoint& Z);
  friend ArcSystem build_hom_system(const Ideal& X, const FatPoint& Z);

 private:
  ArcSystem() = default;
  static ArcSystem assemble(
      PolyRing full_ring, std::vector<RawCoefficient> raw,
      std::vector<std::string> x_coeff_vars, std::vector<std::string> endo_vars,
      std::vector<std::string> constant_vars,
      std::map<std::string, ArcVarInfo> info, std::optional<FatPoint> Z,
      std::optional<DeformationFamily> family,
      std::vector<std::pair<std::string, std::string>> alias);
  PolyRing full_ring_{{}, CoefficientField::rationals()};
  PolyRing ring_{{}, CoefficientField::rationals()};
  Ideal ideal_{ring_, {}};
  Ideal raw_ideal_{full_ring_, {}};
  std::vector<RawCoefficient> raw_;
  std::vector<std::string> x_coeff_vars_, endo_vars_, constant_vars_,
      base_vars_;
  std::map<std::string, ArcVarInfo> var_info_;
  std::optional<FatPoint> Z_;
  std::optional<DeformationFamily> family_;
  mutable std::shared_ptr<RadicalCertificate> radical_;
  std::vector<std::string> eliminated_;
  std::vector<std::pair<std::string, std::string>> alias_;
};

/// Defining ideal of A_Z(Y) by arc-variable substitution and coefficient
/// extraction in the fat point's table algebra, followed by the
/// reduced-structure normalization.
ArcSystem build_arc_system(const DeformationFamily& Y, const FatPoint& Z);

/// A_Z = A_Z(Z): substitute the endomorphism arcs into Z's defining ideal.
ArcSystem build_endo_system(const FatPoint& Z);

/// Hom(Z, X)^red for X in x-variables only: trivial deformation, no
/// endomorphism variables.
ArcSystem build_hom_system(const Ideal& X, const FatPoint& Z);

/// Fixpoint normalization: power generators c*v^m collapse to v, monomial
/// generators to their squarefree part, standalone variables are substituted
/// away (removed from the ring); a radical certificate is attached.
ReducedIdeal reduce_arc_ideal(const Ideal& raw);

/// Same-ring variant of the first two reduction rules (no variable removal).
Ideal simplify_generators(const Ideal& I);

/// Specialize the base variables; at the origin this recovers the
/// Hom-system ideal.
Ideal theta_fiber(const ArcSystem& S,
                  const std::map<std::string, Coeff>& point);

/// S's ideal plus X_sing pulled back through the constant-term variables;
/// presents V = pi^{-1}(X_sing) inside the arc space.
Ideal pi_singular_preimage(const ArcSystem& S, const Ideal& X_sing);

/// Flatness of Y over a linear jet via Ann(t^j) = (t^(n+1-j)); nullopt for
/// general fat points.
std::optional<bool> validate_deformation(const DeformationFamily& Y,
                                         const FatPoint& Z);

struct RenderOptions;

/// Display options for reports: paper-style aliases and a term order that
/// lists endomorphism-heavy terms last, ties broken by trailing-variable
/// comparison. Canonical ring-order rendering stays available by default.
RenderOptions report_render_options(const ArcSystem& S, bool use_alias);

}  // namespace autoarc
