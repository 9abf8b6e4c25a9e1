#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autoarc/geometry.hpp"
#include "autoarc/parser.hpp"

using namespace autoarc;

namespace {

PolyRing qring(std::vector<std::string> vars) {
  return PolyRing(std::move(vars), CoefficientField::rationals());
}

Ideal parse_ideal(const PolyRing& R, std::vector<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, R));
  return Ideal(R, std::move(ps));
}

DeformationFamily family_of(std::vector<std::string> x,
                            std::vector<std::string> t,
                            std::vector<const char*> polys,
                            const CoefficientField& k =
                                CoefficientField::rationals()) {
  std::vector<std::string> all = x;
  all.insert(all.end(), t.begin(), t.end());
  PolyRing R(all, k);
  std::vector<Polynomial> ps;
  for (const char* p : polys) ps.push_back(parse_polynomial(p, R));
  return DeformationFamily(std::move(x), std::move(t), std::move(ps));
}

}  // namespace

TEST_CASE("split components of the deformed node tangent space") {
  auto Y = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem S = build_arc_system(Y, make_linear_jet(1));
  ComponentSet cs = split_components(S.ideal());
  REQUIRE(cs.components.size() == 2);
  CHECK(cs.components[0].dimension == 3);
  CHECK(cs.components[1].dimension == 3);
  // the two branches are (a_1_1, a_1_2 a_2_1 - f) and (a_2_1, a_1_1 a_2_2 - f)
  const PolyRing& R = S.ring();
  bool has_a = false, has_c = false;
  for (const auto& c : cs.components) {
    if (ideal_membership(parse_polynomial("a_1_1", R), c.ideal)) has_a = true;
    if (ideal_membership(parse_polynomial("a_2_1", R), c.ideal)) has_c = true;
  }
  CHECK(has_a);
  CHECK(has_c);
}

TEST_CASE("split components of a monomial and a prime") {
  PolyRing R = qring({"x", "y"});
  ComponentSet xy = split_components(parse_ideal(R, {"x*y"}));
  REQUIRE(xy.components.size() == 2);
  CHECK(xy.components[0].status ==
        ComponentStatus::CertifiedPrimeBySplitExhaustion);

  // the cubicA ideal does not split: one heuristic component
  PolyRing R5 = qring({"a", "b", "c", "d", "f"});
  ComponentSet single = split_components(
      parse_ideal(R5, {"c^2 - a^3", "2*c*d - 3*a^2*b - f"}));
  REQUIRE(single.components.size() == 1);
  CHECK(single.components[0].status == ComponentStatus::Heuristic);
  CHECK(single.components[0].dimension == 3);
}

TEST_CASE("component soundness: generators vanish on every component") {
  PolyRing R = qring({"a", "b", "c", "d", "e", "f"});
  std::vector<Ideal> corpus = {
      parse_ideal(R, {"a*c", "a*d + b*c - f"}),
      parse_ideal(R, {"a^2 - c^2*e", "c^2*f"}),
      parse_ideal(R, {"a*b*c"})};
  for (const auto& I : corpus) {
    ComponentSet cs = split_components(I);
    for (const auto& comp : cs.components)
      for (const auto& g : I.gens())
        CHECK(radical_membership(g, comp.ideal));
    // intersection of components contains the original up to radical
    if (!cs.components.empty()) {
      std::optional<Ideal> inter;
      for (const auto& comp : cs.components)
        inter = inter ? intersect(*inter, comp.ideal) : comp.ideal;
      for (const auto& g : inter->gens()) CHECK(radical_membership(g, I));
    }
  }
}

TEST_CASE("singular loci") {
  PolyRing R = qring({"x", "y"});
  CHECK(singular_locus(parse_ideal(R, {"x*y"})) == parse_ideal(R, {"y", "x"}));
  CHECK(singular_locus(parse_ideal(R, {"y^2 - x^3"})) ==
        parse_ideal(R, {"y", "x"}));
  Ideal smooth = singular_locus(parse_ideal(R, {"x"}));
  CHECK(groebner_basis(smooth).is_unit_ideal());

  // mixed dimension: the origin is singular on the plane-plus-line
  PolyRing R3 = qring({"x", "y", "z"});
  Ideal mixed = singular_locus(parse_ideal(R3, {"x*y", "x*z"}));
  std::map<std::string, Coeff> origin{
      {"x", Coeff(0)}, {"y", Coeff(0)}, {"z", Coeff(0)}};
  for (const auto& g : mixed.gens()) CHECK(evaluate_at(g, origin) == 0);
}

TEST_CASE("dominance flatness") {
  auto Yc = family_of({"x", "y"}, {"t"}, {"y^2 - x^3 - t"});
  ArcSystem Sc = build_arc_system(Yc, make_linear_jet(1));
  CHECK(flatness_by_dominance(ThetaSetup::from_arc(Sc)).verdict ==
        Flatness::Flat);

  auto Yn = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem Sn = build_arc_system(Yn, make_linear_jet(1));
  CHECK(flatness_by_dominance(ThetaSetup::from_arc(Sn)).verdict ==
        Flatness::Flat);

  // vertical component: (f*x, f*y) has the component f = 0
  PolyRing R = qring({"x", "y", "f"});
  ThetaSetup vertical{parse_ideal(R, {"f*x", "f*y"}), {"f"}};
  FlatnessVerdict v = flatness_by_dominance(vertical);
  CHECK(v.verdict == Flatness::NotFlat);
}

TEST_CASE("miracle flatness") {
  auto Yn = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem Sn = build_arc_system(Yn, make_linear_jet(1));
  FlatnessVerdict def = flatness_by_miracle(ThetaSetup::from_arc(Sn));
  CHECK(def.verdict == Flatness::Flat);

  // char-2 deformed cusp: flat in every characteristic
  auto F2 = CoefficientField::prime_field(2);
  auto Yc = family_of({"x", "y"}, {"t"}, {"y^2 - x^3 - t"}, F2);
  ArcSystem Sc = build_arc_system(Yc, make_linear_jet(1, F2));
  CHECK(flatness_by_miracle(ThetaSetup::from_arc(Sc)).verdict ==
        Flatness::Flat);

  // char-2 family x^2 - y^2 z over the base of its z-arc coefficients
  PolyRing W({"x", "y", "z"}, F2);
  ArcSystem Sw = build_hom_system(Ideal(W, {parse_polynomial("x^2 - y^2*z", W)}),
                                  make_linear_jet(1, F2))
                     .with_base_variables({"a_3_1", "a_3_2"});
  FlatnessVerdict bad = flatness_by_miracle(ThetaSetup::from_arc(Sw));
  CHECK(bad.verdict == Flatness::NotFlat);
}

TEST_CASE("tor flatness") {
  // nonflat example over the rationals at the origin of the base
  PolyRing W = qring({"x", "y", "z"});
  ArcSystem Sw = build_hom_system(parse_ideal(W, {"x^2 - y^2*z"}),
                                  make_linear_jet(1))
                     .with_base_variables({"a_3_1", "a_3_2"});
  FlatnessVerdict v = flatness_by_tor(
      ThetaSetup::from_arc(Sw), {{"a_3_1", Coeff(0)}, {"a_3_2", Coeff(0)}});
  CHECK(v.verdict == Flatness::NotFlat);
  bool has_support = false;
  for (const auto& [k, val] : v.evidence)
    if (k == "tor_1 support dimension") {
      has_support = true;
      CHECK(val == "3");
    }
  CHECK(has_support);

  // trivial deformation: projection is flat at any point
  auto Yt = family_of({"x", "y"}, {"t"}, {"x*y"});
  ArcSystem St = build_arc_system(Yt, make_linear_jet(1));
  CHECK(flatness_by_tor(ThetaSetup::from_arc(St), St.origin_point()).verdict ==
        Flatness::Flat);

  // deformed node at f = 0
  auto Yn = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem Sn = build_arc_system(Yn, make_linear_jet(1));
  CHECK(flatness_by_tor(ThetaSetup::from_arc(Sn), Sn.origin_point()).verdict ==
        Flatness::Flat);
}

TEST_CASE("local dimension at a point") {
  auto F2 = CoefficientField::prime_field(2);
  PolyRing R({"a", "b", "c", "d", "e", "f"}, F2);
  Ideal I(R, {parse_polynomial("a^2 - c^2*e", R),
              parse_polynomial("c^2*f", R)});
  std::map<std::string, Coeff> origin;
  for (const auto& v : R.vars()) origin.emplace(v, Coeff(0));
  CHECK(local_dimension_at(I, origin) == 4);

  PolyRing R2 = qring({"x", "y"});
  std::map<std::string, Coeff> p{{"x", Coeff(1)}, {"y", Coeff(0)}};
  CHECK(local_dimension_at(Ideal::zero(R2), p) == 2);
  CHECK(local_dimension_at(parse_ideal(R2, {"x*y"}), p) == 1);
}

TEST_CASE("relative smooth locus") {
  auto Yn = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem Sn = build_arc_system(Yn, make_linear_jet(1));
  Ideal ns = relative_smooth_locus(ThetaSetup::from_arc(Sn));
  // the non-smooth locus contains cb - ad and maps into f = 0
  CHECK(ideal_membership(
      parse_polynomial("a_1_2*a_2_1 - a_1_1*a_2_2", Sn.ring()), ns));
  Ideal image = eliminate(ns, {"e_1_2"});
  REQUIRE(image.gens().size() == 1);
  CHECK(render_polynomial(image.gens()[0]) == "e_1_2");

  // char-2 deformed cusp: the fiber Jacobian minor collapses to a
  auto F2 = CoefficientField::prime_field(2);
  auto Yc = family_of({"x", "y"}, {"t"}, {"y^2 - x^3 - t"}, F2);
  ArcSystem Sc = build_arc_system(Yc, make_linear_jet(1, F2));
  Ideal ns2 = relative_smooth_locus(ThetaSetup::from_arc(Sc));
  CHECK(ideal_membership(parse_polynomial("a_1_1", Sc.ring()), ns2));

  // a smooth trivial family has empty non-smooth locus
  auto Ys = family_of({"x", "y"}, {"t"}, {"y - x^2"});
  ArcSystem Ss = build_arc_system(Ys, make_linear_jet(1));
  Ideal ns3 = relative_smooth_locus(ThetaSetup::from_arc(Ss));
  CHECK(groebner_basis(ns3).is_unit_ideal());
}

TEST_CASE("affine cell certification") {
  PolyRing R = qring({"a", "b", "g", "h"});
  // pinned a, solvable g: remaining cell on b, h... g = b^2 forces a graph
  Ideal I = parse_ideal(R, {"a", "b^2 - g"});
  auto cell = affine_cell_dimension(I);
  REQUIRE(cell.has_value());
  CHECK(*cell == 2);

  // xy - g is not a graph over a coordinate subspace in this limited sense
  Ideal J = parse_ideal(R, {"a*b - g", "a*h - g"});
  CHECK_FALSE(affine_cell_dimension(J).has_value());
}

TEST_CASE("char-2 cubic central fiber splits into a plane and a cylinder") {
  auto F2 = CoefficientField::prime_field(2);
  auto Y = family_of({"x", "y"}, {"t"}, {"y^2 - x^3 - t"}, F2);
  ArcSystem S = build_arc_system(Y, make_linear_jet(1, F2));
  Ideal fib = theta_fiber(S, S.origin_point());
  ComponentSet cs = split_components(fib);
  REQUIRE(cs.components.size() == 2);
  CHECK(cs.components[0].dimension == 2);
  CHECK(cs.components[1].dimension == 2);
  // one branch is the plane a = c = 0, the other the curve cylinder b = 0
  const PolyRing& R = fib.ring();
  bool plane = false, cylinder = false;
  for (const auto& c : cs.components) {
    if (ideal_membership(parse_polynomial("a_1_1", R), c.ideal) &&
        ideal_membership(parse_polynomial("a_2_1", R), c.ideal))
      plane = true;
    if (ideal_membership(parse_polynomial("a_1_2", R), c.ideal) &&
        ideal_membership(parse_polynomial("a_1_1^3 + a_2_1^2", R), c.ideal))
      cylinder = true;
  }
  CHECK(plane);
  CHECK(cylinder);
}

TEST_CASE("dominance restricted to a line in a larger base") {
  auto Y = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem S = build_arc_system(Y, make_linear_jet(2));
  ThetaSetup setup = ThetaSetup::from_arc(S);
  REQUIRE(setup.base_vars.size() == 2);
  // the full base is two-dimensional, so plain dominance is inconclusive
  CHECK(flatness_by_dominance(setup).verdict == Flatness::Unknown);
  FlatnessVerdict v = flatness_by_dominance(setup, {Coeff(1), Coeff(0)});
  CHECK(v.verdict == Flatness::Flat);
  bool caveat = false;
  for (const auto& c : v.caveats)
    if (c.find("line") != std::string::npos) caveat = true;
  CHECK(caveat);
}

TEST_CASE("verdict coherence on the corpus") {
  // systems where at least two methods apply must agree
  auto Yn = family_of({"x", "y"}, {"t"}, {"x*y - t"});
  ArcSystem Sn = build_arc_system(Yn, make_linear_jet(1));
  ThetaSetup setup = ThetaSetup::from_arc(Sn);
  auto d = flatness_by_dominance(setup);
  auto m = flatness_by_miracle(setup);
  auto t = flatness_by_tor(setup, Sn.origin_point());
  CHECK(d.verdict == Flatness::Flat);
  CHECK(d.verdict == m.verdict);
  CHECK(m.verdict == t.verdict);

  PolyRing W = qring({"x", "y", "z"});
  ArcSystem Sw = build_hom_system(parse_ideal(W, {"x^2 - y^2*z"}),
                                  make_linear_jet(1))
                     .with_base_variables({"a_3_1", "a_3_2"});
  auto mw = flatness_by_miracle(ThetaSetup::from_arc(Sw));
  auto tw = flatness_by_tor(ThetaSetup::from_arc(Sw),
                            {{"a_3_1", Coeff(0)}, {"a_3_2", Coeff(0)}});
  CHECK(mw.verdict == Flatness::NotFlat);
  CHECK(mw.verdict == tw.verdict);
}
