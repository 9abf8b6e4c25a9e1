#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autoarc/fatpoint.hpp"
#include "autoarc/parser.hpp"

using namespace autoarc;

TEST_CASE("linear jets") {
  FatPoint dual = make_linear_jet(1);
  CHECK(dual.length() == 2);
  CHECK(multiplication_table_check(dual));

  FatPoint point = make_linear_jet(0);
  CHECK(point.length() == 1);
  CHECK(point.basis()[0].is_one());

  FatPoint z2 = make_linear_jet(2);
  CHECK(z2.length() == 3);
  // t * t^2 = 0 past the truncation
  const auto& row = z2.table(1, 2);
  for (const auto& c : row) CHECK(c == 0);
  CHECK(multiplication_table_check(z2));
}

TEST_CASE("cusp germ jet at order 3") {
  PolyRing G({"u", "v"}, CoefficientField::rationals());
  Ideal germ(G, {parse_polynomial("v^2 - u^3", G)});
  FatPoint Z = make_germ_jet({"u", "v"}, germ, 3);
  CHECK(Z.length() == 7);
  CHECK(Z.basis()[0].is_one());
  // basis sorted by degree then lex in the declared order
  for (size_t i = 1; i < Z.basis().size(); ++i)
    CHECK(Z.basis()[i - 1].degree() <= Z.basis()[i].degree());
  CHECK(multiplication_table_check(Z));
  CHECK(Z.degree_one_indices().size() == 2);
}

TEST_CASE("cusp germ lengths follow the Hilbert function 1,2,2,2,...") {
  PolyRing G({"u", "v"}, CoefficientField::rationals());
  Ideal germ(G, {parse_polynomial("v^2 - u^3", G)});
  size_t expected = 1;
  for (int n = 1; n <= 4; ++n) {
    expected += 2;
    CHECK(make_germ_jet({"u", "v"}, germ, n).length() == expected);
  }
}

TEST_CASE("order zero germ is the reduced point") {
  PolyRing G({"u", "v"}, CoefficientField::rationals());
  Ideal germ(G, {parse_polynomial("v^2 - u^3", G)});
  FatPoint Z = make_germ_jet({"u", "v"}, germ, 0);
  CHECK(Z.length() == 1);
}

TEST_CASE("smooth germ jet matches the linear jet") {
  PolyRing G({"u", "v"}, CoefficientField::rationals());
  Ideal germ(G, {parse_polynomial("v", G)});
  FatPoint Z = make_germ_jet({"u", "v"}, germ, 2);
  FatPoint L = make_linear_jet(2);
  REQUIRE(Z.length() == 3);
  // basis {1, u, u^2}; the table is the truncated polynomial table
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(Z.table(i, j) == L.table(i, j));
}

TEST_CASE("germ ideal must vanish at the origin") {
  PolyRing G({"u"}, CoefficientField::rationals());
  Ideal bad(G, {parse_polynomial("u - 1", G)});
  CHECK_THROWS_AS(make_germ_jet({"u"}, bad, 2), UnsupportedError);
}

TEST_CASE("corrupted table fails the check") {
  FatPoint Z = make_linear_jet(2);
  std::vector<std::vector<Coeff>> table;
  for (size_t i = 0; i < Z.length(); ++i)
    for (size_t j = 0; j < Z.length(); ++j) table.push_back(Z.table(i, j));
  table[1 * Z.length() + 2][0] = Coeff(1);  // t * t^2 = 1: breaks nilpotency
  CHECK_FALSE(multiplication_table_check(Z, table));
}

TEST_CASE("table agrees with normal-form multiplication") {
  PolyRing G({"u", "v"}, CoefficientField::rationals());
  Ideal germ(G, {parse_polynomial("v^2 - u^3", G)});
  FatPoint Z = make_germ_jet({"u", "v"}, germ, 3);
  const auto& gb = groebner_basis(Z.defining_ideal());
  for (size_t i = 0; i < Z.length(); ++i) {
    for (size_t j = 0; j < Z.length(); ++j) {
      Polynomial prod = Polynomial::monomial_poly(
          G, Z.basis()[i] * Z.basis()[j], Coeff(1));
      Polynomial nf = normal_form(prod, gb);
      Polynomial from_table = Polynomial::zero(G);
      const auto& row = Z.table(i, j);
      for (size_t m = 0; m < Z.length(); ++m)
        from_table = from_table + Polynomial::monomial_poly(G, Z.basis()[m],
                                                            row[m]);
      CHECK(nf == from_table);
    }
  }
}
