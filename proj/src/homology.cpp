#include "autoarc/homology.hpp"

#include <algorithm>
#include <map>

namespace autoarc {

bool SubquotientModule::is_zero() const {
  if (gens.empty()) return true;
  Submodule R(gens[0].ring(), gens[0].rank(), rels);
  auto gb = module_groebner(R);
  for (const auto& g : gens)
    if (!module_membership(g, gb)) return false;
  return true;
}

namespace {

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  if (k > n) return out;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

// Koszul differential d_i : R^(C(n,i)*r) -> R^(C(n,i-1)*r) applied to the
// basis vector indexed by (subset S, component j).
VectorPoly koszul_diff(const std::vector<Polynomial>& seq, size_t r,
                       const std::vector<size_t>& S,
                       const std::map<std::vector<size_t>, size_t>& index_prev,
                       size_t j, size_t rank_prev) {
  const PolyRing& ring = seq[0].ring();
  VectorPoly out(ring, rank_prev);
  for (size_t l = 0; l < S.size(); ++l) {
    std::vector<size_t> T;
    for (size_t t = 0; t < S.size(); ++t)
      if (t != l) T.push_back(S[t]);
    size_t block = index_prev.at(T);
    Polynomial f = (l % 2 == 0) ? seq[S[l]] : -seq[S[l]];
    std::vector<Polynomial> comps(rank_prev, Polynomial::zero(ring));
    comps[block * r + j] = f;
    out = out + VectorPoly(ring, std::move(comps));
  }
  return out;
}

}  // namespace

SubquotientModule koszul_homology(const std::vector<Polynomial>& seq,
                                  const Submodule& M, size_t i) {
  if (seq.empty()) throw UnsupportedError("empty Koszul sequence");
  const PolyRing& ring = M.ring();
  for (const auto& f : seq)
    if (f.ring() != ring) throw InvariantError("sequence in wrong ring");
  const size_t n = seq.size();
  const size_t r = M.rank();
  if (i > n) return SubquotientModule{};  // K_i = 0

  auto Si = subsets(n, i);
  auto Sprev = i > 0 ? subsets(n, i - 1) : std::vector<std::vector<size_t>>{};
  auto Snext = subsets(n, i + 1);
  std::map<std::vector<size_t>, size_t> idx_i, idx_prev;
  for (size_t t = 0; t < Si.size(); ++t) idx_i[Si[t]] = t;
  for (size_t t = 0; t < Sprev.size(); ++t) idx_prev[Sprev[t]] = t;

  const size_t rank_i = Si.size() * r;
  const size_t rank_prev = Sprev.size() * r;

  // Relations in degree i and i-1: C(n,*) block copies of M.
  auto block_copies = [&](const std::vector<std::vector<size_t>>& Ss) {
    std::vector<VectorPoly> out;
    for (size_t b = 0; b < Ss.size(); ++b) {
      for (const auto& g : M.gens()) {
        std::vector<Polynomial> comps(Ss.size() * r, Polynomial::zero(ring));
        for (size_t j = 0; j < r; ++j) comps[b * r + j] = g.comp(j);
        out.emplace_back(ring, std::move(comps));
      }
    }
    return out;
  };

  // Generators of N = preimage of M_(i-1) under d_i. For i = 0 the
  // differential is zero, so N is everything.
  std::vector<VectorPoly> N;
  if (i == 0) {
    for (size_t p = 0; p < rank_i; ++p)
      N.push_back(VectorPoly::unit(ring, rank_i, p));
  } else {
    std::vector<VectorPoly> columns;
    for (const auto& S : Si)
      for (size_t j = 0; j < r; ++j)
        columns.push_back(koszul_diff(seq, r, S, idx_prev, j, rank_prev));
    const size_t d_cols = columns.size();
    auto rel_prev = block_copies(Sprev);
    for (auto& g : rel_prev) columns.push_back(std::move(g));
    Submodule span(ring, rank_prev == 0 ? 1 : rank_prev, std::move(columns));
    auto syz = module_groebner_and_syzygies(span).syzygies;
    for (const auto& s : syz.gens()) {
      std::vector<Polynomial> comps(s.comps().begin(),
                                    s.comps().begin() + d_cols);
      VectorPoly v(ring, std::move(comps));
      if (!v.is_zero()) N.push_back(std::move(v));
    }
  }

  // U = M_i + d_(i+1)(K_(i+1)).
  std::vector<VectorPoly> U = block_copies(Si);
  for (const auto& S : Snext) {
    for (size_t j = 0; j < r; ++j)
      U.push_back(koszul_diff(seq, r, S, idx_i, j, rank_i));
  }

  return SubquotientModule{std::move(N), std::move(U)};
}

int depth(const Submodule& M, const std::vector<Polynomial>& seq) {
  const size_t n = seq.size();
  for (size_t i = 1; i <= n; ++i) {
    if (koszul_homology(seq, M, i).is_zero())
      return static_cast<int>(n - i + 1);
  }
  return 0;
}

CohenMacaulayResult cohen_macaulay_test(const Ideal& I) {
  const PolyRing& ring = I.ring();
  int dim = krull_dimension(I);
  if (dim < 0) return CohenMacaulayResult{true, 0, -1, true};  // empty scheme

  bool graded = true;
  for (const auto& g : I.gens()) {
    uint32_t d = g.terms().front().mon.degree();
    for (const auto& t : g.terms())
      if (t.mon.degree() != d) graded = false;
  }

  std::vector<VectorPoly> gens;
  for (const auto& g : I.gens())
    gens.emplace_back(ring, std::vector<Polynomial>{g});
  Submodule M(ring, 1, std::move(gens));

  std::vector<Polynomial> vars;
  for (size_t i = 0; i < ring.nvars(); ++i)
    vars.push_back(Polynomial::variable(ring, i));

  int dep = depth(M, vars);
  return CohenMacaulayResult{dep == dim, dep, dim, graded};
}

TorResult tor_one(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw InvariantError("tor_one ring mismatch");
  Ideal inter = intersect(I, J);
  Ideal prod = ideal_product(I, J);
  bool zero = true;
  for (const auto& g : inter.gens())
    if (!ideal_membership(g, prod)) zero = false;
  Ideal ann = quotient(prod, inter);
  int dim = krull_dimension(ann);
  return TorResult{std::move(inter), std::move(prod), std::move(ann), dim,
                   zero};
}

}  // namespace autoarc
