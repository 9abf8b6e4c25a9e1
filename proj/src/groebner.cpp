#include "autoarc/groebner.hpp"

#include <algorithm>
#include <set>

namespace autoarc {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_) throw InvariantError("generator in wrong ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const PolyRing& ring) {
  return Ideal(ring, {Polynomial::constant(ring, Coeff(1))});
}

bool Ideal::operator==(const Ideal& o) const {
  if (ring_ != o.ring_) return false;
  const auto& a = groebner_basis(*this).elements();
  const auto& b = groebner_basis(o).elements();
  return a == b;
}

namespace {

// Head reduction: stops once the leading term is irreducible.
Polynomial reduce_head(const Polynomial& f, const std::vector<Polynomial>& G) {
  const PolyRing& ring = f.ring();
  const auto& k = ring.field();
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.mon)) {
        h = h - g.mul_term(lt.mon.divide(g.leading_monomial()),
                           k.div(lt.coeff, g.leading_coeff()));
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  return h;
}

// Full reduction of f by the (not necessarily reduced) basis G.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G) {
  const PolyRing& ring = f.ring();
  const auto& k = ring.field();
  Polynomial rem = Polynomial::zero(ring);
  Polynomial h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    const Term& lt = h.leading_term();
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.mon)) {
        Monomial q = lt.mon.divide(g.leading_monomial());
        Coeff c = k.div(lt.coeff, g.leading_coeff());
        h = h - g.mul_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = rem + Polynomial::monomial_poly(ring, lt.mon, lt.coeff);
      h = h - Polynomial::monomial_poly(ring, lt.mon, lt.coeff);
    }
  }
  return rem;
}

struct SPair {
  size_t i, j;
  Monomial lcm;
};

// Buchberger with the coprimality and chain criteria, normal selection
// strategy (degree of the lcm, then the ring order, then pair age).
std::vector<Polynomial> buchberger(const PolyRing& ring,
                                   std::vector<Polynomial> gens) {
  std::vector<Polynomial> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());

  auto pair_less = [&ring](const SPair& a, const SPair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ring.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  std::vector<SPair> pairs;
  auto push_pairs_with = [&](size_t t) {
    for (size_t i = 0; i < t; ++i)
      pairs.push_back(
          SPair{i, t, Monomial::lcm(G[i].leading_monomial(),
                                    G[t].leading_monomial())});
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };
  std::set<std::pair<size_t, size_t>> done;

  for (size_t t = 1; t < G.size(); ++t) push_pairs_with(t);

  size_t iterations = 0;
  while (!pairs.empty()) {
    if (++iterations > 200000)
      throw ResourceError("Buchberger iteration guard exceeded");
    SPair p = pairs.front();
    pairs.erase(pairs.begin());
    done.insert({p.i, p.j});

    const Monomial& li = G[p.i].leading_monomial();
    const Monomial& lj = G[p.j].leading_monomial();
    if (li.coprime(lj)) continue;  // Buchberger's first criterion

    // Chain criterion: skip if some k with LM(k) | lcm(i,j) has both
    // (i,k) and (j,k) already treated.
    bool chained = false;
    for (size_t t = 0; t < G.size() && !chained; ++t) {
      if (t == p.i || t == p.j) continue;
      if (!G[t].leading_monomial().divides(p.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(p.i, t)) && done.count(key(p.j, t))) chained = true;
    }
    if (chained) continue;

    const auto& k = ring.field();
    Polynomial s =
        G[p.i].mul_term(p.lcm.divide(li), k.inv(G[p.i].leading_coeff())) -
        G[p.j].mul_term(p.lcm.divide(lj), k.inv(G[p.j].leading_coeff()));
    Polynomial r = reduce_head(s, G);
    if (!r.is_zero()) {
      G.push_back(r.monic());
      push_pairs_with(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = G[i].leading_monomial(),
                     &mj = G[j].leading_monomial();
      if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Inter-reduce tails.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce_full(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(),
            [&ring](const Polynomial& a, const Polynomial& b) {
              return ring.compare(a.leading_monomial(), b.leading_monomial()) <
                     0;
            });
  return reduced;
}

}  // namespace

const GroebnerBasis& groebner_basis(const Ideal& I) {
  // Concurrent callers may both compute; the reduced basis is unique, so
  // whichever store wins is the same value.
  auto cached = std::atomic_load(&I.gb_cache_);
  if (!cached) {
    cached = std::make_shared<GroebnerBasis>(I.ring(),
                                             buchberger(I.ring(), I.gens()));
    std::atomic_store(&I.gb_cache_, cached);
  }
  return *std::atomic_load(&I.gb_cache_);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.ring() != G.ring()) throw InvariantError("normal_form ring mismatch");
  return reduce_full(f, G.elements());
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis(I)).is_zero();
}

namespace {

// Ring with `front` variables prepended to I's ring variables.
PolyRing extend_front(const PolyRing& ring,
                      const std::vector<std::string>& front,
                      MonomialOrder order) {
  std::vector<std::string> vars = front;
  vars.insert(vars.end(), ring.vars().begin(), ring.vars().end());
  return PolyRing(vars, ring.field(), order);
}

}  // namespace

Ideal transport(const Ideal& I, const PolyRing& target) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(ring_map(g, target, {}));
  return Ideal(target, std::move(gens));
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  std::string w = "w_rab";
  while (I.ring().index_of(w)) w += "_";
  PolyRing ext = extend_front(I.ring(), {w}, MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(ring_map(g, ext, {}));
  Polynomial wf = Polynomial::variable(ext, 0) * ring_map(f, ext, {});
  gens.push_back(Polynomial::constant(ext, Coeff(1)) - wf);
  Ideal rab(ext, std::move(gens));
  return groebner_basis(rab).is_unit_ideal();
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep) {
  const PolyRing& ring = I.ring();
  std::set<std::string> keep_set(keep.begin(), keep.end());
  for (const auto& v : keep)
    if (!ring.index_of(v))
      throw InvariantError("eliminate: unknown variable " + v);
  std::vector<std::string> elim_vars, keep_vars;
  for (const auto& v : ring.vars()) {
    if (keep_set.count(v))
      keep_vars.push_back(v);
    else
      elim_vars.push_back(v);
  }
  // Target ring keeps the original order kind (block falls back to degrevlex).
  MonomialOrder target_order = ring.order();
  if (target_order.kind == MonomialOrder::Kind::Block)
    target_order = MonomialOrder::degrevlex();
  PolyRing target(keep_vars, ring.field(), target_order);
  if (elim_vars.empty()) return transport(I, target);

  std::vector<std::string> all = elim_vars;
  all.insert(all.end(), keep_vars.begin(), keep_vars.end());
  PolyRing work(all, ring.field(), MonomialOrder::block_elim(elim_vars.size()));

  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(ring_map(g, work, {}));
  Ideal lifted(work, std::move(gens));
  const auto& gb = groebner_basis(lifted);

  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool pure = true;
    for (size_t i = 0; i < elim_vars.size() && pure; ++i)
      if (g.uses_var(i)) pure = false;
    if (pure) kept.push_back(ring_map(g, target, {}));
  }
  return Ideal(target, std::move(kept));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw InvariantError("saturation by zero");
  std::string w = "w_sat";
  while (I.ring().index_of(w)) w += "_";
  PolyRing ext = extend_front(I.ring(), {w}, MonomialOrder::block_elim(1));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(ring_map(g, ext, {}));
  gens.push_back(Polynomial::constant(ext, Coeff(1)) -
                 Polynomial::variable(ext, 0) * ring_map(f, ext, {}));
  Ideal J(ext, std::move(gens));
  Ideal res = eliminate(J, I.ring().vars());
  return transport(res, I.ring());
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw InvariantError("intersect ring mismatch");
  std::string w = "w_tag";
  while (I.ring().index_of(w)) w += "_";
  PolyRing ext = extend_front(I.ring(), {w}, MonomialOrder::block_elim(1));
  Polynomial wv = Polynomial::variable(ext, 0);
  Polynomial one_minus_w = Polynomial::constant(ext, Coeff(1)) - wv;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(wv * ring_map(g, ext, {}));
  for (const auto& h : J.gens())
    gens.push_back(one_minus_w * ring_map(h, ext, {}));
  Ideal K(ext, std::move(gens));
  return transport(eliminate(K, I.ring().vars()), I.ring());
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvariantError("division by zero polynomial");
  const PolyRing& ring = f.ring();
  const auto& k = ring.field();
  Polynomial q = Polynomial::zero(ring);
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!g.leading_monomial().divides(lt.mon))
      throw InvariantError("inexact polynomial division");
    Monomial m = lt.mon.divide(g.leading_monomial());
    Coeff c = k.div(lt.coeff, g.leading_coeff());
    Polynomial t = Polynomial::monomial_poly(ring, m, c);
    q = q + t;
    h = h - g.mul_term(m, c);
  }
  return q;
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw InvariantError("quotient ring mismatch");
  if (J.is_zero_ideal()) return Ideal::unit(I.ring());  // I : (0) = R
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    // I : (g) = (1/g) * (I  intersect  (g))
    Ideal cap = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> quots;
    for (const auto& h : cap.gens()) quots.push_back(exact_divide(h, g));
    Ideal part(I.ring(), std::move(quots));
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw InvariantError("sum ring mismatch");
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw InvariantError("product ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens())
    for (const auto& h : J.gens()) gens.push_back(g * h);
  return Ideal(I.ring(), std::move(gens));
}

namespace {

// Minimum hitting set over the support masks of the initial ideal, by
// branch and bound. dim R/I = nvars - tau.
void hit_search(const std::vector<uint32_t>& masks, uint32_t chosen,
                size_t count, size_t& best) {
  if (count >= best) return;
  uint32_t pending = 0;
  bool any = false;
  for (uint32_t m : masks) {
    if ((m & chosen) == 0) {
      pending = m;
      any = true;
      break;
    }
  }
  if (!any) {
    best = count;
    return;
  }
  for (uint32_t bit = 0; bit < 32; ++bit) {
    if (pending & (1u << bit))
      hit_search(masks, chosen | (1u << bit), count + 1, best);
  }
}

}  // namespace

int krull_dimension(const Ideal& I) {
  size_t n = I.ring().nvars();
  if (n > kMaxDimensionVars)
    throw ResourceError("krull_dimension limited to " +
                        std::to_string(kMaxDimensionVars) + " variables");
  const auto& gb = groebner_basis(I);
  if (gb.is_unit_ideal()) return -1;
  std::vector<uint32_t> masks;
  for (const auto& g : gb.elements()) {
    uint32_t m = 0;
    for (size_t i = 0; i < n; ++i)
      if (g.leading_monomial().exponent(i) > 0) m |= (1u << i);
    masks.push_back(m);
  }
  // Drop masks that are supersets of another (hitting the subset suffices).
  std::vector<uint32_t> pruned;
  for (uint32_t m : masks) {
    bool keep = true;
    for (uint32_t o : masks)
      if (o != m && (o & m) == o) {
        keep = false;
        break;
      }
    if (keep && std::find(pruned.begin(), pruned.end(), m) == pruned.end())
      pruned.push_back(m);
  }
  size_t best = n + 1;
  hit_search(pruned, 0, 0, best);
  if (best > n) best = 0;  // no masks: zero ideal
  return static_cast<int>(n - best);
}

RadicalCertificate radical_certificate(const Ideal& I) {
  const auto& gb = groebner_basis(I);
  if (gb.is_zero_ideal() || gb.is_unit_ideal())
    return {RadicalStatus::CertifiedRadical, "trivial"};
  bool squarefree = true;
  for (const auto& g : gb.elements())
    if (!g.leading_monomial().is_squarefree()) squarefree = false;
  if (squarefree)
    return {RadicalStatus::CertifiedRadical, "squarefree initial ideal"};

  // Complete intersection with singular locus of strictly smaller dimension
  // (Serre R0 + S1).
  int dim = krull_dimension(I);
  size_t n = I.ring().nvars();
  size_t codim = n - static_cast<size_t>(dim);
  std::vector<Polynomial> gens = I.gens();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return Polynomial::compare(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() != codim) return {RadicalStatus::Unknown, ""};

  std::vector<size_t> all_cols(n);
  for (size_t j = 0; j < n; ++j) all_cols[j] = j;
  auto jac = jacobian_matrix(gens, all_cols);
  std::vector<Polynomial> minors;
  for (const auto& cols : index_subsets(n, codim)) {
    std::vector<std::vector<Polynomial>> sub;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<Polynomial> row;
      for (size_t c : cols) row.push_back(jac[i][c]);
      sub.push_back(std::move(row));
    }
    minors.push_back(determinant(sub));
  }
  Ideal sing = ideal_sum(I, Ideal(I.ring(), std::move(minors)));
  int sdim = krull_dimension(sing);
  if (sdim < dim)
    return {RadicalStatus::CertifiedRadical,
            "generically smooth complete intersection"};
  return {RadicalStatus::Unknown, ""};
}

Ideal specialize(const Ideal& I, const std::map<std::string, Coeff>& bindings) {
  const PolyRing& ring = I.ring();
  std::vector<std::string> remaining;
  for (const auto& v : ring.vars())
    if (!bindings.count(v)) remaining.push_back(v);
  MonomialOrder order = ring.order();
  if (order.kind == MonomialOrder::Kind::Block)
    order = MonomialOrder::degrevlex();
  PolyRing target(remaining, ring.field(), order);
  std::map<std::string, Polynomial> map;
  for (const auto& [v, c] : bindings) {
    if (!ring.index_of(v))
      throw InvariantError("specialize: unknown variable " + v);
    map.emplace(v, Polynomial::constant(target, c));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(ring_map(g, target, map));
  return Ideal(target, std::move(gens));
}

}  // namespace autoarc
