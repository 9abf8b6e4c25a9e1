#pragma once

#include "autoarc/arc.hpp"

namespace autoarc {

enum class ComponentStatus { CertifiedPrimeBySplitExhaustion, Heuristic };

struct Component {
  Ideal ideal;
  int dimension;
  ComponentStatus status;
};

struct ComponentSet {
  std::vector<Component> components;
  std::vector<std::string> provenance;  // split log

  bool all_same_dimension() const;
  int max_dimension() const;  // -1 when empty
};

/// Heuristic component splitting: branch on monomial content, perfect powers
/// and univariate factors of Groebner elements; saturate each branch by the
/// complementary factor; prune contained branches. A component is certified
/// prime only by split exhaustion with generators the limited factorizer
/// recognizes as irreducible.
ComponentSet split_components(const Ideal& I);

/// Ideal of the singular locus: I + codim-size minors of the Jacobian; for
/// non-equidimensional inputs computed per component (plus pairwise
/// component intersections) and intersected. Output is normalized through
/// simplify_generators.
Ideal singular_locus(const Ideal& I);

enum class Flatness { Flat, NotFlat, Unknown };
enum class FlatnessMethod { Dominance, Miracle, Tor };

struct FlatnessVerdict {
  Flatness verdict = Flatness::Unknown;
  FlatnessMethod method = FlatnessMethod::Dominance;
  std::vector<std::pair<std::string, std::string>> evidence;
  std::vector<std::string> caveats;
};

/// theta analysed as a map Spec R/I -> affine space on the base variables.
struct ThetaSetup {
  Ideal total;
  std::vector<std::string> base_vars;

  static ThetaSetup from_arc(const ArcSystem& S) {
    return ThetaSetup{S.ideal(), S.base_vars()};
  }
  std::vector<std::string> fiber_vars() const;
};

/// Dominance over a Dedekind base (one base variable, or a designated line
/// through the origin of a larger base): flat iff every component of the
/// radical-certified ideal eliminates to (0) on the base.
FlatnessVerdict flatness_by_dominance(const ThetaSetup& S);
FlatnessVerdict flatness_by_dominance(const ThetaSetup& S,
                                      const std::vector<Coeff>& line_direction);

/// Miracle of flatness: regular base, Cohen-Macaulay total space, constant
/// sampled fiber dimension; a local dimension deficit at a sampled point
/// witnesses non-flatness.
FlatnessVerdict flatness_by_miracle(const ThetaSetup& S);

/// Tor_1 test at a base point: zero module implies flat at the point.
FlatnessVerdict flatness_by_tor(const ThetaSetup& S,
                                const std::map<std::string, Coeff>& point);

/// Max dimension over the components passing through the point; -1 when the
/// point is not on the variety.
int local_dimension_at(const Ideal& I, const std::map<std::string, Coeff>& point);

/// Ideal of the non-smooth locus of theta: total ideal + fiber-codimension
/// minors of the Jacobian with respect to the fiber variables.
Ideal relative_smooth_locus(const ThetaSetup& S);

/// If repeated elimination of pinned and linearly solvable variables empties
/// the ideal, V is an affine cell; returns its dimension.
std::optional<int> affine_cell_dimension(const Ideal& I);

/// Evaluate at a total point (all variables bound).
Coeff evaluate_at(const Polynomial& f, const std::map<std::string, Coeff>& point);

/// Deterministic sample point with coordinates 1,2,3,... on the given
/// variables.
std::map<std::string, Coeff> generic_point(const std::vector<std::string>& vars);

}  // namespace autoarc
