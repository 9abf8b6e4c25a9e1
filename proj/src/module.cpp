#include "autoarc/module.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace autoarc {

VectorPoly::VectorPoly(PolyRing ring, std::vector<Polynomial> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
  for (const auto& p : comps_)
    if (p.ring() != ring_) throw InvariantError("component in wrong ring");
}

VectorPoly VectorPoly::unit(const PolyRing& ring, size_t rank, size_t pos) {
  VectorPoly v(ring, rank);
  v.comps_[pos] = Polynomial::constant(ring, Coeff(1));
  return v;
}

bool VectorPoly::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

size_t VectorPoly::lead_pos() const {
  for (size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return i;
  throw InvariantError("lead of zero module element");
}

VectorPoly VectorPoly::operator+(const VectorPoly& o) const {
  if (rank() != o.rank()) throw InvariantError("rank mismatch");
  VectorPoly out(ring_, rank());
  for (size_t i = 0; i < comps_.size(); ++i)
    out.comps_[i] = comps_[i] + o.comps_[i];
  return out;
}

VectorPoly VectorPoly::operator-(const VectorPoly& o) const {
  if (rank() != o.rank()) throw InvariantError("rank mismatch");
  VectorPoly out(ring_, rank());
  for (size_t i = 0; i < comps_.size(); ++i)
    out.comps_[i] = comps_[i] - o.comps_[i];
  return out;
}

VectorPoly VectorPoly::mul_term(const Monomial& m, const Coeff& c) const {
  VectorPoly out(ring_, rank());
  for (size_t i = 0; i < comps_.size(); ++i)
    out.comps_[i] = comps_[i].mul_term(m, c);
  return out;
}

VectorPoly VectorPoly::mul_poly(const Polynomial& p) const {
  VectorPoly out(ring_, rank());
  for (size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i] * p;
  return out;
}

VectorPoly VectorPoly::monic() const {
  size_t p = lead_pos();
  const auto& k = ring_.field();
  Coeff inv = k.inv(comps_[p].leading_coeff());
  return mul_term(Monomial::one(ring_.nvars()), inv);
}

Submodule::Submodule(PolyRing ring, size_t rank, std::vector<VectorPoly> gens)
    : ring_(std::move(ring)), rank_(rank) {
  for (auto& g : gens) {
    if (g.rank() != rank_) throw InvariantError("generator rank mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

namespace {

// Reducer basis with cached leads and nonzero-component lists; lead_pos is
// linear in the rank, so it must not be recomputed per reduction step.
struct ReducerSet {
  const std::vector<VectorPoly>* basis = nullptr;
  std::vector<size_t> lead;                       // lead position per element
  std::vector<std::vector<size_t>> support;       // nonzero components
  // reducers grouped by lead position
  std::vector<std::vector<size_t>> by_pos;

  explicit ReducerSet(const std::vector<VectorPoly>& G, size_t rank)
      : basis(&G), by_pos(rank) {
    lead.reserve(G.size());
    support.reserve(G.size());
    for (size_t t = 0; t < G.size(); ++t) append(t);
  }

  // Registers basis element t (the basis vector may have grown).
  void append(size_t t) {
    const auto& g = (*basis)[t];
    size_t p = g.lead_pos();
    lead.push_back(p);
    std::vector<size_t> sup;
    for (size_t i = 0; i < g.rank(); ++i)
      if (!g.comp(i).is_zero()) sup.push_back(i);
    support.push_back(std::move(sup));
    by_pos[p].push_back(t);
  }
};

constexpr size_t kNoExclusion = static_cast<size_t>(-1);

// One reduction step: subtract the multiple of a reducer whose lead divides
// h[pos]'s lead. Returns false when no reducer applies.
bool reduce_step(std::vector<Polynomial>& h, size_t pos, const ReducerSet& R,
                 size_t exclude = kNoExclusion) {
  const auto& G = *R.basis;
  const auto& k = h[pos].ring().field();
  const Term& lt = h[pos].leading_term();
  for (size_t t : R.by_pos[pos]) {
    if (t == exclude) continue;
    const Term& gl = G[t].comp(pos).leading_term();
    if (!gl.mon.divides(lt.mon)) continue;
    Monomial q = lt.mon.divide(gl.mon);
    Coeff c = k.div(lt.coeff, gl.coeff);
    for (size_t i : R.support[t]) h[i] = h[i] - G[t].comp(i).mul_term(q, c);
    return true;
  }
  return false;
}

// Full normal form against the reducer set.
VectorPoly reduce_full(const VectorPoly& v, const ReducerSet& R,
                       size_t exclude = kNoExclusion) {
  const PolyRing& ring = v.ring();
  std::vector<Polynomial> rem(v.rank(), Polynomial::zero(ring));
  std::vector<Polynomial> h = v.comps();
  for (size_t pos = 0; pos < h.size(); ++pos) {
    while (!h[pos].is_zero()) {
      if (!reduce_step(h, pos, R, exclude)) {
        const Term& lt = h[pos].leading_term();
        Polynomial t = Polynomial::monomial_poly(ring, lt.mon, lt.coeff);
        rem[pos] = rem[pos] + t;
        h[pos] = h[pos] - t;
      }
    }
  }
  return VectorPoly(ring, std::move(rem));
}

// Head reduction only: stops once the lead is irreducible (enough inside the
// Buchberger loop; tails are cleaned up by the final inter-reduction).
VectorPoly reduce_head(const VectorPoly& v, const ReducerSet& R) {
  const PolyRing& ring = v.ring();
  std::vector<Polynomial> h = v.comps();
  size_t pos = 0;
  while (pos < h.size()) {
    if (h[pos].is_zero()) {
      ++pos;
      continue;
    }
    if (!reduce_step(h, pos, R)) break;
  }
  return VectorPoly(ring, std::move(h));
}

std::vector<VectorPoly> module_buchberger(const PolyRing& ring,
                                          std::vector<VectorPoly> gens) {
  std::vector<VectorPoly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());

  struct MPair {
    size_t i, j;
    size_t pos;
    Monomial lcm;
  };
  auto pair_less = [&ring](const MPair& a, const MPair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.pos != b.pos) return a.pos < b.pos;
    int c = ring.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::vector<MPair> pairs;
  auto push_pairs_with = [&](size_t t) {
    size_t pt = G[t].lead_pos();
    for (size_t i = 0; i < t; ++i) {
      if (G[i].lead_pos() != pt) continue;
      pairs.push_back(MPair{i, t, pt,
                            Monomial::lcm(G[i].comp(pt).leading_monomial(),
                                          G[t].comp(pt).leading_monomial())});
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };
  std::set<std::pair<size_t, size_t>> done;
  for (size_t t = 1; t < G.size(); ++t) push_pairs_with(t);

  const size_t rank = G.empty() ? 1 : G[0].rank();
  auto reducers = std::make_unique<ReducerSet>(G, rank);
  const auto& k = ring.field();
  size_t iterations = 0;
  while (!pairs.empty()) {
    if (++iterations > 400000)
      throw ResourceError("module Buchberger iteration guard exceeded");
    MPair p = pairs.front();
    pairs.erase(pairs.begin());
    done.insert({p.i, p.j});

    // Chain criterion (valid for modules; the coprimality criterion is not).
    bool chained = false;
    for (size_t t = 0; t < G.size() && !chained; ++t) {
      if (t == p.i || t == p.j || G[t].lead_pos() != p.pos) continue;
      if (!G[t].comp(p.pos).leading_monomial().divides(p.lcm)) continue;
      auto key = [](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(p.i, t)) && done.count(key(p.j, t))) chained = true;
    }
    if (chained) continue;

    const Term& li = G[p.i].comp(p.pos).leading_term();
    const Term& lj = G[p.j].comp(p.pos).leading_term();
    Monomial qi = p.lcm.divide(li.mon);
    Monomial qj = p.lcm.divide(lj.mon);
    Coeff ci = k.inv(li.coeff), cj = k.inv(lj.coeff);
    // sparse S-pair: only the union of the two supports is touched
    std::vector<Polynomial> comps(rank, Polynomial::zero(ring));
    for (size_t idx : reducers->support[p.i])
      comps[idx] = G[p.i].comp(idx).mul_term(qi, ci);
    for (size_t idx : reducers->support[p.j])
      comps[idx] = comps[idx] - G[p.j].comp(idx).mul_term(qj, cj);
    VectorPoly r = reduce_head(VectorPoly(ring, std::move(comps)), *reducers);
    if (!r.is_zero()) {
      G.push_back(r.monic());
      reducers->append(G.size() - 1);
      push_pairs_with(G.size() - 1);
    }
  }

  // Minimalize (leads were cached during the run).
  std::vector<VectorPoly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    size_t pi = reducers->lead[i];
    const Monomial& mi = G[i].comp(pi).leading_monomial();
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || reducers->lead[j] != pi) continue;
      const Monomial& mj = G[j].comp(pi).leading_monomial();
      if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Inter-reduce against the set itself, excluding the element in hand.
  ReducerSet Rmin(minimal, rank);
  std::vector<VectorPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    VectorPoly r = reduce_full(minimal[i], Rmin, i);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(),
            [&ring](const VectorPoly& a, const VectorPoly& b) {
              size_t pa = a.lead_pos(), pb = b.lead_pos();
              if (pa != pb) return pa < pb;
              return ring.compare(a.comp(pa).leading_monomial(),
                                  b.comp(pb).leading_monomial()) < 0;
            });
  return reduced;
}

}  // namespace

std::vector<VectorPoly> module_groebner(const Submodule& M) {
  return module_buchberger(M.ring(), M.gens());
}

VectorPoly module_normal_form(const VectorPoly& v,
                              const std::vector<VectorPoly>& G) {
  if (G.empty()) return v;
  return reduce_full(v, ReducerSet(G, v.rank()));
}

bool module_membership(const VectorPoly& v, const std::vector<VectorPoly>& G) {
  if (v.is_zero()) return true;
  if (G.empty()) return false;
  return reduce_full(v, ReducerSet(G, v.rank())).is_zero();
}

SyzygyResult module_groebner_and_syzygies(const Submodule& M) {
  const PolyRing& ring = M.ring();
  const size_t r = M.rank();
  const size_t s = M.gens().size();
  // Work in R^(r+s): (g_i | e_i). Since the position-over-term order ranks
  // the first block above the tag block, elements with zero first block have
  // tag parts that generate the syzygy module, while the others restrict to
  // the reduced GB of M.
  std::vector<VectorPoly> extended;
  for (size_t i = 0; i < s; ++i) {
    std::vector<Polynomial> comps(r + s, Polynomial::zero(ring));
    for (size_t j = 0; j < r; ++j) comps[j] = M.gens()[i].comp(j);
    comps[r + i] = Polynomial::constant(ring, Coeff(1));
    extended.emplace_back(ring, std::move(comps));
  }
  auto G = module_buchberger(ring, std::move(extended));

  std::vector<VectorPoly> gb;
  std::vector<VectorPoly> syz;
  for (const auto& g : G) {
    bool front_zero = true;
    for (size_t j = 0; j < r && front_zero; ++j)
      if (!g.comp(j).is_zero()) front_zero = false;
    std::vector<Polynomial> tail(g.comps().begin() + r, g.comps().end());
    if (front_zero) {
      syz.emplace_back(ring, std::move(tail));
    } else {
      std::vector<Polynomial> front(g.comps().begin(), g.comps().begin() + r);
      gb.emplace_back(ring, std::move(front));
    }
  }
  return SyzygyResult{std::move(gb), Submodule(ring, s, std::move(syz))};
}

}  // namespace autoarc
