#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autoarc/homology.hpp"
#include "autoarc/parser.hpp"

using namespace autoarc;

namespace {

PolyRing qring(std::vector<std::string> vars) {
  return PolyRing(std::move(vars), CoefficientField::rationals());
}

VectorPoly vec(const PolyRing& R, std::vector<const char*> comps) {
  std::vector<Polynomial> ps;
  for (const char* c : comps) ps.push_back(parse_polynomial(c, R));
  return VectorPoly(R, std::move(ps));
}

std::vector<Polynomial> ring_vars(const PolyRing& R) {
  std::vector<Polynomial> vars;
  for (size_t i = 0; i < R.nvars(); ++i)
    vars.push_back(Polynomial::variable(R, i));
  return vars;
}

// Check sum_i s_i g_i = 0 for every syzygy.
void check_syzygies(const Submodule& M, const SyzygyResult& result) {
  for (const auto& s : result.syzygies.gens()) {
    VectorPoly acc(M.ring(), M.rank());
    for (size_t i = 0; i < M.gens().size(); ++i)
      acc = acc + M.gens()[i].mul_poly(s.comp(i));
    CHECK(acc.is_zero());
  }
}

}  // namespace

TEST_CASE("syzygies of (x, y) is the Koszul relation") {
  PolyRing R = qring({"x", "y"});
  Submodule M(R, 1, {vec(R, {"x"}), vec(R, {"y"})});
  auto result = module_groebner_and_syzygies(M);
  REQUIRE(result.syzygies.gens().size() == 1);
  check_syzygies(M, result);
  const auto& s = result.syzygies.gens()[0];
  CHECK(((s.comp(0) == parse_polynomial("y", R) &&
          s.comp(1) == parse_polynomial("-x", R)) ||
         (s.comp(0) == parse_polynomial("-y", R) &&
          s.comp(1) == parse_polynomial("x", R))));
}

TEST_CASE("single generator has no syzygies") {
  PolyRing R = qring({"x", "y"});
  Submodule M(R, 1, {vec(R, {"x^2 - y"})});
  auto result = module_groebner_and_syzygies(M);
  CHECK(result.syzygies.gens().empty());
}

TEST_CASE("syzygies of matrix columns multiply to zero") {
  PolyRing R = qring({"a", "b", "c", "d"});
  // columns of [[c, a], [d, b]]
  Submodule M(R, 2, {vec(R, {"c", "d"}), vec(R, {"a", "b"})});
  auto result = module_groebner_and_syzygies(M);
  check_syzygies(M, result);
  // det = cb - ad is nonzero, so no constant syzygies exist
  for (const auto& s : result.syzygies.gens())
    for (const auto& c : s.comps()) CHECK_FALSE(c.is_unit_constant());
}

TEST_CASE("module groebner reduces membership") {
  PolyRing R = qring({"x", "y"});
  Submodule M(R, 1, {vec(R, {"x^2"}), vec(R, {"x*y"})});
  auto gb = module_groebner(M);
  CHECK(module_membership(vec(R, {"x^2*y^3"}), gb));
  CHECK_FALSE(module_membership(vec(R, {"x"}), gb));
  CHECK_FALSE(module_membership(vec(R, {"y^2"}), gb));
}

TEST_CASE("koszul homology basics") {
  PolyRing R = qring({"x", "y"});
  Submodule unitM(R, 1, {});  // presents R itself
  // regular sequence: H_1 vanishes
  auto h1 = koszul_homology(
      {parse_polynomial("x", R), parse_polynomial("y", R)}, unitM, 1);
  CHECK(h1.is_zero());

  // repeated element: H_1 is nonzero
  PolyRing X = qring({"x"});
  Submodule unitX(X, 1, {});
  auto h1x = koszul_homology(
      {parse_polynomial("x", X), parse_polynomial("x", X)}, unitX, 1);
  CHECK_FALSE(h1x.is_zero());

  // Koszul homology of a regular sequence vanishes in all positive degrees
  PolyRing R3 = qring({"x", "y", "z"});
  Submodule unit3(R3, 1, {});
  for (size_t i = 1; i <= 3; ++i)
    CHECK(koszul_homology(ring_vars(R3), unit3, i).is_zero());
}

TEST_CASE("depth via the first vanishing Koszul homology") {
  PolyRing R = qring({"x", "y"});
  Submodule Mx(R, 1, {vec(R, {"x"})});  // presents R/(x)
  CHECK(depth(Mx, ring_vars(R)) == 1);
  Submodule unitM(R, 1, {});
  CHECK(depth(unitM, ring_vars(R)) == 2);

  PolyRing F2({"a", "b", "c", "d", "e", "f"}, CoefficientField::prime_field(2));
  Submodule M2(F2, 1,
               {VectorPoly(F2, {parse_polynomial("a^2 - c^2*e", F2)}),
                VectorPoly(F2, {parse_polynomial("c^2*f", F2)})});
  CHECK(depth(M2, ring_vars(F2)) == 4);
}

TEST_CASE("cohen-macaulay test") {
  PolyRing F2({"a", "b", "c", "d", "e", "f"}, CoefficientField::prime_field(2));
  Ideal I(F2, {parse_polynomial("a^2 - c^2*e", F2),
               parse_polynomial("c^2*f", F2)});
  auto cm = cohen_macaulay_test(I);
  CHECK(cm.is_cm);
  CHECK(cm.depth_value == 4);
  CHECK(cm.dimension == 4);

  PolyRing R = qring({"x", "y"});
  CHECK(cohen_macaulay_test(Ideal::zero(R)).is_cm);

  PolyRing R3 = qring({"x", "y", "z"});
  Ideal mixed(R3, {parse_polynomial("x*y", R3), parse_polynomial("x*z", R3)});
  auto cm2 = cohen_macaulay_test(mixed);
  CHECK_FALSE(cm2.is_cm);
  CHECK(cm2.depth_value == 1);
  CHECK(cm2.dimension == 2);
}

TEST_CASE("tor_one") {
  PolyRing R = qring({"a", "b", "c", "d", "e", "f"});
  Ideal I(R, {parse_polynomial("a^2 - c^2*e", R),
              parse_polynomial("2*a*b - 2*c*d*e - c^2*f", R)});
  Ideal J(R, {parse_polynomial("e", R), parse_polynomial("f", R)});
  auto tor = tor_one(I, J);
  CHECK_FALSE(tor.is_zero);
  CHECK(tor.support_dimension == 3);

  PolyRing XY = qring({"x", "y"});
  auto zero = tor_one(Ideal(XY, {parse_polynomial("x", XY)}),
                      Ideal(XY, {parse_polynomial("y", XY)}));
  CHECK(zero.is_zero);
  CHECK(zero.support_dimension == -1);

  auto self = tor_one(Ideal(XY, {parse_polynomial("x", XY)}),
                      Ideal(XY, {parse_polynomial("x", XY)}));
  CHECK_FALSE(self.is_zero);
  CHECK(self.support_dimension == 1);  // dim R - 1
}

TEST_CASE("depth bounded by dimension on a small corpus") {
  PolyRing R = qring({"x", "y", "z"});
  std::vector<Ideal> corpus = {
      Ideal(R, {parse_polynomial("x*y", R)}),
      Ideal(R, {parse_polynomial("x*y", R), parse_polynomial("x*z", R)}),
      Ideal(R, {parse_polynomial("x^2 - y", R)}),
      Ideal::zero(R)};
  for (const auto& I : corpus) {
    auto cm = cohen_macaulay_test(I);
    CHECK(cm.depth_value <= cm.dimension);
  }
}

TEST_CASE("tor support dimension bounded by both factors") {
  PolyRing R = qring({"x", "y", "z"});
  std::vector<std::pair<Ideal, Ideal>> corpus = {
      {Ideal(R, {parse_polynomial("x*y", R)}),
       Ideal(R, {parse_polynomial("x", R)})},
      {Ideal(R, {parse_polynomial("x^2", R)}),
       Ideal(R, {parse_polynomial("x", R), parse_polynomial("y", R)})}};
  for (const auto& [I, J] : corpus) {
    auto tor = tor_one(I, J);
    if (!tor.is_zero) {
      CHECK(tor.support_dimension <= krull_dimension(I));
      CHECK(tor.support_dimension <= krull_dimension(J));
    }
  }
}
