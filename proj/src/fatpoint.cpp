#include "autoarc/fatpoint.hpp"

#include <algorithm>

namespace autoarc {

FatPoint::FatPoint(PolyRing germ_ring, Ideal defining_ideal,
                   std::vector<Monomial> basis, int order, bool linear)
    : germ_ring_(std::move(germ_ring)),
      defining_ideal_(std::move(defining_ideal)),
      basis_(std::move(basis)),
      order_(order),
      linear_jet_(linear) {
  build_table();
}

void FatPoint::build_table() {
  const size_t l = basis_.size();
  const auto& gb = groebner_basis(defining_ideal_);
  table_.assign(l * l, {});
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < l; ++j) {
      Polynomial prod = Polynomial::monomial_poly(germ_ring_,
                                                  basis_[i] * basis_[j],
                                                  Coeff(1));
      Polynomial nf = normal_form(prod, gb);
      std::vector<Coeff> row(l, Coeff(0));
      for (const auto& t : nf.terms()) {
        auto it = std::find(basis_.begin(), basis_.end(), t.mon);
        if (it == basis_.end())
          throw InvariantError("normal form leaves the standard basis");
        row[static_cast<size_t>(it - basis_.begin())] = t.coeff;
      }
      table_[i * l + j] = std::move(row);
    }
  }
}

std::vector<size_t> FatPoint::degree_one_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree() == 1) out.push_back(i);
  return out;
}

FatPoint make_linear_jet(int n, const CoefficientField& field,
                         const std::string& var) {
  if (n < 0) throw UnsupportedError("jet order must be nonnegative");
  PolyRing ring({var}, field);
  Polynomial tpow =
      Polynomial::variable(ring, 0).pow(static_cast<uint32_t>(n + 1));
  Ideal J(ring, {tpow});
  std::vector<Monomial> basis;
  for (int e = 0; e <= n; ++e)
    basis.push_back(Monomial({static_cast<uint32_t>(e)}));
  return FatPoint(ring, J, std::move(basis), n, true);
}

namespace {

// Lex comparison with earlier declared variables largest.
bool lex_less(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  return false;
}

void enumerate_standard(const std::vector<Polynomial>& gb_elems,
                        std::vector<uint32_t>& exps, size_t var, uint32_t left,
                        std::vector<Monomial>& out) {
  if (var == exps.size()) {
    Monomial m(exps);
    for (const auto& g : gb_elems)
      if (g.leading_monomial().divides(m)) return;
    out.push_back(std::move(m));
    return;
  }
  for (uint32_t e = 0; e <= left; ++e) {
    exps[var] = e;
    enumerate_standard(gb_elems, exps, var + 1, left - e, out);
  }
  exps[var] = 0;
}

}  // namespace

FatPoint make_germ_jet(const std::vector<std::string>& germ_vars,
                       const Ideal& germ_ideal, int n) {
  if (n < 0) throw UnsupportedError("jet order must be nonnegative");
  PolyRing ring(germ_vars, germ_ideal.ring().field());
  std::vector<Polynomial> gens;
  for (const auto& g : germ_ideal.gens()) {
    Polynomial h = ring_map(g, ring, {});
    for (const auto& t : h.terms())
      if (t.mon.is_one())
        throw UnsupportedError(
            "germ ideal must vanish at the origin (translate first)");
    gens.push_back(std::move(h));
  }
  // m^(n+1): all monomials of degree n+1.
  {
    std::vector<uint32_t> exps(ring.nvars(), 0);
    std::vector<Monomial> trunc;
    enumerate_standard({}, exps, 0, static_cast<uint32_t>(n + 1), trunc);
    for (const auto& m : trunc)
      if (m.degree() == static_cast<uint32_t>(n + 1))
        gens.push_back(Polynomial::monomial_poly(ring, m, Coeff(1)));
  }
  Ideal J(ring, std::move(gens));
  const auto& gb = groebner_basis(J);
  if (gb.is_unit_ideal()) throw InvariantError("fat point collapsed to zero");

  std::vector<Monomial> basis;
  std::vector<uint32_t> exps(ring.nvars(), 0);
  enumerate_standard(gb.elements(), exps, 0, static_cast<uint32_t>(n), basis);
  std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(a, b);
  });
  if (basis.empty() || !basis.front().is_one())
    throw InvariantError("fat point basis must start with 1");
  return FatPoint(ring, J, std::move(basis), n, false);
}

bool multiplication_table_check(const FatPoint& Z) {
  std::vector<std::vector<Coeff>> table;
  const size_t l = Z.length();
  table.reserve(l * l);
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) table.push_back(Z.table(i, j));
  return multiplication_table_check(Z, table);
}

bool multiplication_table_check(const FatPoint& Z,
                                const std::vector<std::vector<Coeff>>& table) {
  const size_t l = Z.length();
  const auto& k = Z.germ_ring().field();
  auto tab = [&](size_t i, size_t j) -> const std::vector<Coeff>& {
    return table[i * l + j];
  };
  auto mul_vec = [&](const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    std::vector<Coeff> out(l, Coeff(0));
    for (size_t i = 0; i < l; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < l; ++j) {
        if (b[j] == 0) continue;
        Coeff c = k.mul(a[i], b[j]);
        const auto& row = tab(i, j);
        for (size_t m = 0; m < l; ++m)
          out[m] = k.add(out[m], k.mul(c, row[m]));
      }
    }
    return out;
  };
  auto basis_vec = [&](size_t i) {
    std::vector<Coeff> v(l, Coeff(0));
    v[i] = Coeff(1);
    return v;
  };

  // Identity: 1 * b = b; commutativity; associativity on all triples.
  for (size_t i = 0; i < l; ++i) {
    if (tab(0, i) != basis_vec(i) || tab(i, 0) != basis_vec(i)) return false;
    for (size_t j = 0; j < l; ++j)
      if (tab(i, j) != tab(j, i)) return false;
  }
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j)
      for (size_t m = 0; m < l; ++m) {
        auto left = mul_vec(tab(i, j), basis_vec(m));
        auto right = mul_vec(basis_vec(i), tab(j, m));
        if (left != right) return false;
      }

  // Nilpotency of every non-constant basis element.
  for (size_t i = 1; i < l; ++i) {
    std::vector<Coeff> p = basis_vec(i);
    bool nil = false;
    for (size_t step = 0; step <= l; ++step) {
      p = mul_vec(p, basis_vec(i));
      if (std::all_of(p.begin(), p.end(), [](const Coeff& c) { return c == 0; })) {
        nil = true;
        break;
      }
    }
    if (!nil) return false;
  }
  return true;
}

}  // namespace autoarc
