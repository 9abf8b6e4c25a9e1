#include "autoarc/arc.hpp"

#include <algorithm>
#include <functional>

#include "autoarc/parser.hpp"

namespace autoarc {

DeformationFamily::DeformationFamily(std::vector<std::string> x_vars,
                                     std::vector<std::string> t_params,
                                     std::vector<Polynomial> polys)
    : x_vars_(std::move(x_vars)),
      t_params_(std::move(t_params)),
      family_ring_([&] {
        std::vector<std::string> all = x_vars_;
        all.insert(all.end(), t_params_.begin(), t_params_.end());
        return PolyRing(all, polys.empty()
                                 ? CoefficientField::rationals()
                                 : polys[0].ring().field());
      }()),
      x_ring_(x_vars_, family_ring_.field()),
      central_fiber_(x_ring_, {}) {
  for (auto& p : polys) {
    if (p.ring() != family_ring_)
      polys_.push_back(ring_map(p, family_ring_, {}));
    else
      polys_.push_back(std::move(p));
  }
  std::map<std::string, Polynomial> zeros;
  for (const auto& t : t_params_)
    zeros.emplace(t, Polynomial::zero(x_ring_));
  std::vector<Polynomial> fiber;
  for (const auto& f : polys_) fiber.push_back(ring_map(f, x_ring_, zeros));
  central_fiber_ = Ideal(x_ring_, std::move(fiber));
}

std::string DeformationFamily::fingerprint() const {
  std::string all;
  for (const auto& p : polys_) all += render_polynomial(p) + ";";
  // FNV-1a over the canonical rendering.
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : all) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

// Element of (coefficient ring) tensor (fat-point algebra), as a coordinate
// vector over the fat-point basis.
struct AlgebraElem {
  const FatPoint* Z;
  PolyRing ring;
  std::vector<Polynomial> coords;  // length l

  static AlgebraElem zero(const FatPoint& Z, const PolyRing& ring) {
    return AlgebraElem{&Z, ring,
                       std::vector<Polynomial>(Z.length(),
                                               Polynomial::zero(ring))};
  }
  static AlgebraElem constant(const FatPoint& Z, const PolyRing& ring,
                              const Coeff& c) {
    auto e = zero(Z, ring);
    e.coords[0] = Polynomial::constant(ring, c);
    return e;
  }

  AlgebraElem add(const AlgebraElem& o) const {
    AlgebraElem out = *this;
    for (size_t m = 0; m < coords.size(); ++m)
      out.coords[m] = out.coords[m] + o.coords[m];
    return out;
  }

  AlgebraElem mul(const AlgebraElem& o) const {
    const size_t l = coords.size();
    AlgebraElem out = zero(*Z, ring);
    for (size_t i = 0; i < l; ++i) {
      if (coords[i].is_zero()) continue;
      for (size_t j = 0; j < l; ++j) {
        if (o.coords[j].is_zero()) continue;
        Polynomial prod = coords[i] * o.coords[j];
        const auto& row = Z->table(i, j);
        for (size_t m = 0; m < l; ++m) {
          if (row[m] == 0) continue;
          out.coords[m] = out.coords[m] + prod.mul_scalar(row[m]);
        }
      }
    }
    return out;
  }

  AlgebraElem pow(uint32_t e) const {
    AlgebraElem out = constant(*Z, ring, Coeff(1));
    AlgebraElem base = *this;
    while (e > 0) {
      if (e & 1) out = out.mul(base);
      e >>= 1;
      if (e > 0) base = base.mul(base);
    }
    return out;
  }
};

// Evaluate f under variable -> algebra element.
AlgebraElem evaluate_in_algebra(const Polynomial& f, const FatPoint& Z,
                                const PolyRing& coeff_ring,
                                const std::vector<AlgebraElem>& images) {
  AlgebraElem out = AlgebraElem::zero(Z, coeff_ring);
  for (const auto& t : f.terms()) {
    AlgebraElem term = AlgebraElem::constant(Z, coeff_ring, t.coeff);
    for (size_t i = 0; i < f.ring().nvars(); ++i) {
      uint32_t e = t.mon.exponent(i);
      if (e == 0) continue;
      term = term.mul(images[i].pow(e));
    }
    out = out.add(term);
  }
  return out;
}

std::string coeff_var_name(size_t i, size_t m) {
  return "a_" + std::to_string(i) + "_" + std::to_string(m);
}
std::string endo_var_name(size_t j, size_t m) {
  return "e_" + std::to_string(j) + "_" + std::to_string(m);
}

// Paper-style aliases: single letters across the x-coefficient slots then the
// endomorphism slots (constant slots consume a letter) when everything fits
// in the alphabet at length <= 2; otherwise a_im digit pairs for the
// x-coefficients and letters from 'e' for the endomorphism block.
std::vector<std::pair<std::string, std::string>> build_alias(
    size_t N, size_t r, size_t l) {
  std::vector<std::pair<std::string, std::string>> alias;
  size_t total = N * l + r * l;
  if (l <= 2 && total <= 26) {
    size_t letter = 0;
    for (size_t i = 1; i <= N; ++i)
      for (size_t m = 1; m <= l; ++m)
        alias.push_back({coeff_var_name(i, m),
                         std::string(1, static_cast<char>('a' + letter++))});
    for (size_t j = 1; j <= r; ++j)
      for (size_t m = 1; m <= l; ++m) {
        char c = static_cast<char>('a' + letter++);
        if (m >= 2) alias.push_back({endo_var_name(j, m), std::string(1, c)});
      }
    return alias;
  }
  if (N <= 9 && l <= 9) {
    for (size_t i = 1; i <= N; ++i)
      for (size_t m = 1; m <= l; ++m)
        alias.push_back({coeff_var_name(i, m),
                         "a" + std::to_string(i) + std::to_string(m)});
  }
  size_t letter = 4;  // 'e'
  for (size_t j = 1; j <= r && letter < 26; ++j)
    for (size_t m = 1; m <= l && letter < 26; ++m) {
      char c = static_cast<char>('a' + letter++);
      if (m >= 2) alias.push_back({endo_var_name(j, m), std::string(1, c)});
    }
  return alias;
}

}  // namespace

const ArcVarInfo& ArcSystem::var_info(const std::string& name) const {
  auto it = var_info_.find(name);
  if (it == var_info_.end())
    throw InvariantError("unknown arc variable " + name);
  return it->second;
}

const FatPoint& ArcSystem::fat_point() const {
  if (!Z_) throw InvariantError("arc system has no fat point");
  return *Z_;
}

const DeformationFamily& ArcSystem::family() const {
  if (!family_) throw InvariantError("arc system has no family");
  return *family_;
}

std::vector<std::string> ArcSystem::fiber_vars() const {
  std::vector<std::string> out;
  for (const auto& v : ring_.vars())
    if (std::find(base_vars_.begin(), base_vars_.end(), v) == base_vars_.end())
      out.push_back(v);
  return out;
}

std::map<std::string, Coeff> ArcSystem::origin_point() const {
  std::map<std::string, Coeff> pt;
  for (const auto& v : base_vars_) pt.emplace(v, Coeff(0));
  return pt;
}

ArcSystem ArcSystem::with_base_variables(std::vector<std::string> base) const {
  for (const auto& v : base)
    if (!ring_.index_of(v))
      throw InvariantError("base variable not in arc ring: " + v);
  ArcSystem out = *this;
  out.base_vars_ = std::move(base);
  return out;
}

Ideal simplify_generators(const Ideal& I) {
  const PolyRing& ring = I.ring();
  std::vector<Polynomial> gens = I.gens();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& g : gens) {
      if (g.nterms() != 1) continue;
      const Monomial& m = g.terms()[0].mon;
      if (m.is_one()) continue;
      if (!m.is_squarefree()) {
        g = Polynomial::monomial_poly(ring, m.squarefree_part(), Coeff(1));
        changed = true;
      } else if (g.terms()[0].coeff != 1) {
        g = g.monic();
        changed = true;
      }
    }
  }
  std::vector<Polynomial> dedup;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (std::find(dedup.begin(), dedup.end(), g) == dedup.end())
      dedup.push_back(g);
  }
  Ideal cleaned(ring, std::move(dedup));
  return Ideal(ring, groebner_basis(cleaned).elements());
}

namespace {

ReducedIdealLight reduce_arc_ideal_light(const Ideal& raw) {
  PolyRing ring = raw.ring();
  std::vector<Polynomial> gens = raw.gens();
  std::vector<std::string> eliminated;

  bool changed = true;
  while (changed) {
    changed = false;
    // (i)+(ii): power and monomial normalization.
    for (auto& g : gens) {
      if (g.is_zero() || g.nterms() != 1) continue;
      const Monomial& m = g.terms()[0].mon;
      if (m.is_one()) continue;
      Monomial sf = m.squarefree_part();
      if (sf != m || g.terms()[0].coeff != 1) {
        g = Polynomial::monomial_poly(ring, sf, Coeff(1));
        changed = true;
      }
    }
    // (iii): substitute away standalone variables.
    std::optional<size_t> var_index;
    for (const auto& g : gens) {
      if (g.nterms() == 1 && g.terms()[0].mon.degree() == 1) {
        for (size_t v = 0; v < ring.nvars(); ++v)
          if (g.terms()[0].mon.exponent(v) == 1) {
            var_index = v;
            break;
          }
      }
      if (var_index) break;
    }
    if (var_index) {
      std::string name = ring.var(*var_index);
      std::vector<std::string> remaining;
      for (const auto& v : ring.vars())
        if (v != name) remaining.push_back(v);
      PolyRing smaller(remaining, ring.field(), ring.order());
      std::map<std::string, Polynomial> bind{
          {name, Polynomial::zero(smaller)}};
      std::vector<Polynomial> mapped;
      for (const auto& g : gens) {
        Polynomial h = ring_map(g, smaller, bind);
        if (!h.is_zero()) mapped.push_back(std::move(h));
      }
      gens = std::move(mapped);
      ring = smaller;
      eliminated.push_back(name);
      changed = true;
    }
  }

  std::vector<Polynomial> dedup;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (std::find(dedup.begin(), dedup.end(), g) == dedup.end())
      dedup.push_back(std::move(g));
  }
  Ideal ideal(ring, std::move(dedup));
  return ReducedIdealLight{std::move(ideal), std::move(eliminated)};
}

}  // namespace

ReducedIdeal reduce_arc_ideal(const Ideal& raw) {
  ReducedIdealLight light = reduce_arc_ideal_light(raw);
  RadicalCertificate cert = radical_certificate(light.ideal);
  return ReducedIdeal{std::move(light.ideal), std::move(light.eliminated),
                      std::move(cert)};
}

const RadicalCertificate& ArcSystem::radical() const {
  auto cached = std::atomic_load(&radical_);
  if (!cached) {
    cached = std::make_shared<RadicalCertificate>(radical_certificate(ideal_));
    std::atomic_store(&radical_, cached);
  }
  return *std::atomic_load(&radical_);
}

// Shared tail of the three builders: attach raw coefficients, reduce, fill
// role maps.
ArcSystem ArcSystem::assemble(
    PolyRing full_ring, std::vector<RawCoefficient> raw,
    std::vector<std::string> x_coeff_vars, std::vector<std::string> endo_vars,
    std::vector<std::string> constant_vars,
    std::map<std::string, ArcVarInfo> info, std::optional<FatPoint> Z,
    std::optional<DeformationFamily> family,
    std::vector<std::pair<std::string, std::string>> alias) {
  ArcSystem S;
  S.full_ring_ = full_ring;
  std::vector<Polynomial> gens;
  for (const auto& rc : raw)
    if (!rc.coeff.is_zero()) gens.push_back(rc.coeff);
  S.raw_ideal_ = Ideal(full_ring, gens);
  S.raw_ = std::move(raw);

  ReducedIdealLight red = reduce_arc_ideal_light(S.raw_ideal_);
  S.ring_ = red.ideal.ring();
  S.ideal_ = std::move(red.ideal);
  S.eliminated_ = std::move(red.eliminated);

  auto surviving = [&](const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& n : names)
      if (S.ring_.index_of(n)) out.push_back(n);
    return out;
  };
  S.x_coeff_vars_ = surviving(x_coeff_vars);
  S.endo_vars_ = surviving(endo_vars);
  S.constant_vars_ = surviving(constant_vars);
  S.base_vars_ = S.endo_vars_;
  S.var_info_ = std::move(info);
  S.Z_ = std::move(Z);
  S.family_ = std::move(family);
  S.alias_ = std::move(alias);
  return S;
}

ArcSystem build_arc_system(const DeformationFamily& Y, const FatPoint& Z) {
  if (Y.t_params() != Z.germ_vars())
    throw InvariantError(
        "family parameters do not match the fat point's germ variables");
  if (Y.family_ring().field() != Z.germ_ring().field())
    throw InvariantError("family and fat point over different fields");
  const size_t N = Y.x_vars().size();
  const size_t r = Y.t_params().size();
  const size_t l = Z.length();

  std::vector<std::string> x_names, e_names, const_names, all;
  std::map<std::string, ArcVarInfo> info;
  for (size_t i = 1; i <= N; ++i)
    for (size_t m = 1; m <= l; ++m) {
      std::string n = coeff_var_name(i, m);
      x_names.push_back(n);
      all.push_back(n);
      if (m == 1) const_names.push_back(n);
      info[n] = ArcVarInfo{false, i, m};
    }
  for (size_t j = 1; j <= r; ++j)
    for (size_t m = 2; m <= l; ++m) {
      std::string n = endo_var_name(j, m);
      e_names.push_back(n);
      all.push_back(n);
      info[n] = ArcVarInfo{true, j, m};
    }
  PolyRing ring(all, Y.family_ring().field());

  // Arc variables: x_i -> sum a_i_m b_m, t_j -> sum_{m>=2} e_j_m b_m (the
  // endomorphism constant terms are omitted: the reduced-structure
  // normalization).
  std::vector<AlgebraElem> images;
  for (size_t i = 1; i <= N; ++i) {
    AlgebraElem e = AlgebraElem::zero(Z, ring);
    for (size_t m = 1; m <= l; ++m)
      e.coords[m - 1] =
          Polynomial::variable(ring, *ring.index_of(coeff_var_name(i, m)));
    images.push_back(std::move(e));
  }
  for (size_t j = 1; j <= r; ++j) {
    AlgebraElem e = AlgebraElem::zero(Z, ring);
    for (size_t m = 2; m <= l; ++m)
      e.coords[m - 1] =
          Polynomial::variable(ring, *ring.index_of(endo_var_name(j, m)));
    images.push_back(std::move(e));
  }

  std::vector<RawCoefficient> raw;
  for (size_t fi = 0; fi < Y.polys().size(); ++fi) {
    AlgebraElem val = evaluate_in_algebra(Y.polys()[fi], Z, ring, images);
    for (size_t m = 0; m < l; ++m)
      raw.push_back(RawCoefficient{RawCoefficient::Source::Family, fi, m + 1,
                                   val.coords[m]});
  }
  // Constraints from Z's own defining ideal evaluated on the endomorphism
  // arcs (vanish identically over linear jets).
  std::vector<AlgebraElem> endo_images(images.begin() + N, images.end());
  for (size_t gi = 0; gi < Z.defining_ideal().gens().size(); ++gi) {
    AlgebraElem val = evaluate_in_algebra(Z.defining_ideal().gens()[gi], Z,
                                          ring, endo_images);
    for (size_t m = 0; m < l; ++m)
      raw.push_back(RawCoefficient{RawCoefficient::Source::FatPointIdeal, gi,
                                   m + 1, val.coords[m]});
  }

  return ArcSystem::assemble(ring, std::move(raw), x_names, e_names, const_names,
                  std::move(info), Z, Y, build_alias(N, r, l));
}

ArcSystem build_endo_system(const FatPoint& Z) {
  const size_t r = Z.germ_vars().size();
  const size_t l = Z.length();
  std::vector<std::string> e_names, all;
  std::map<std::string, ArcVarInfo> info;
  for (size_t j = 1; j <= r; ++j)
    for (size_t m = 2; m <= l; ++m) {
      std::string n = endo_var_name(j, m);
      e_names.push_back(n);
      all.push_back(n);
      info[n] = ArcVarInfo{true, j, m};
    }
  PolyRing ring(all, Z.germ_ring().field());

  std::vector<AlgebraElem> images;
  for (size_t j = 1; j <= r; ++j) {
    AlgebraElem e = AlgebraElem::zero(Z, ring);
    for (size_t m = 2; m <= l; ++m)
      e.coords[m - 1] =
          Polynomial::variable(ring, *ring.index_of(endo_var_name(j, m)));
    images.push_back(std::move(e));
  }
  std::vector<RawCoefficient> raw;
  for (size_t gi = 0; gi < Z.defining_ideal().gens().size(); ++gi) {
    AlgebraElem val =
        evaluate_in_algebra(Z.defining_ideal().gens()[gi], Z, ring, images);
    for (size_t m = 0; m < l; ++m)
      raw.push_back(RawCoefficient{RawCoefficient::Source::FatPointIdeal, gi,
                                   m + 1, val.coords[m]});
  }
  return ArcSystem::assemble(ring, std::move(raw), {}, e_names, {}, std::move(info), Z,
                  std::nullopt, build_alias(0, r, l));
}

ArcSystem build_hom_system(const Ideal& X, const FatPoint& Z) {
  const size_t N = X.ring().nvars();
  const size_t l = Z.length();
  std::vector<std::string> x_names, const_names, all;
  std::map<std::string, ArcVarInfo> info;
  for (size_t i = 1; i <= N; ++i)
    for (size_t m = 1; m <= l; ++m) {
      std::string n = coeff_var_name(i, m);
      x_names.push_back(n);
      all.push_back(n);
      if (m == 1) const_names.push_back(n);
      info[n] = ArcVarInfo{false, i, m};
    }
  PolyRing ring(all, X.ring().field());

  std::vector<AlgebraElem> images;
  for (size_t i = 1; i <= N; ++i) {
    AlgebraElem e = AlgebraElem::zero(Z, ring);
    for (size_t m = 1; m <= l; ++m)
      e.coords[m - 1] =
          Polynomial::variable(ring, *ring.index_of(coeff_var_name(i, m)));
    images.push_back(std::move(e));
  }
  std::vector<RawCoefficient> raw;
  for (size_t gi = 0; gi < X.gens().size(); ++gi) {
    AlgebraElem val = evaluate_in_algebra(X.gens()[gi], Z, ring, images);
    for (size_t m = 0; m < l; ++m)
      raw.push_back(RawCoefficient{RawCoefficient::Source::Family, gi, m + 1,
                                   val.coords[m]});
  }
  return ArcSystem::assemble(ring, std::move(raw), x_names, {}, const_names,
                  std::move(info), Z, std::nullopt, build_alias(N, 0, l));
}

Ideal theta_fiber(const ArcSystem& S, const std::map<std::string, Coeff>& point) {
  std::map<std::string, Coeff> bindings;
  for (const auto& [name, value] : point) {
    if (S.ring().index_of(name)) {
      bindings.emplace(name, value);
    } else {
      // The variable was eliminated by the reduced-structure normalization,
      // i.e. it vanishes identically on the arc space.
      if (value != 0) {
        PolyRing empty_fiber_ring(S.ring().vars(), S.ring().field());
        return Ideal::unit(empty_fiber_ring);
      }
    }
  }
  return specialize(S.ideal(), bindings);
}

Ideal pi_singular_preimage(const ArcSystem& S, const Ideal& X_sing) {
  std::map<std::string, Polynomial> bind;
  const auto& xr = X_sing.ring();
  for (size_t i = 0; i < xr.nvars(); ++i) {
    std::string cname = coeff_var_name(i + 1, 1);
    auto idx = S.ring().index_of(cname);
    bind.emplace(xr.var(i), idx ? Polynomial::variable(S.ring(), *idx)
                                : Polynomial::zero(S.ring()));
  }
  std::vector<Polynomial> gens = S.ideal().gens();
  for (const auto& g : X_sing.gens()) {
    Polynomial h = ring_map(g, S.ring(), bind);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return Ideal(S.ring(), std::move(gens));
}

RenderOptions report_render_options(const ArcSystem& S, bool use_alias) {
  RenderOptions opts;
  if (use_alias)
    for (const auto& [canon, alias] : S.alias_map()) opts.names[canon] = alias;
  const PolyRing ring = S.ring();
  std::vector<bool> is_endo(ring.nvars(), false);
  for (const auto& e : S.endo_vars())
    if (auto idx = ring.index_of(e)) is_endo[*idx] = true;
  opts.term_greater = [ring, is_endo](const Monomial& a, const Monomial& b) {
    uint32_t ea = 0, eb = 0;
    for (size_t i = 0; i < ring.nvars(); ++i) {
      if (!is_endo[i]) continue;
      ea += a.exponent(i);
      eb += b.exponent(i);
    }
    if (ea != eb) return ea < eb;
    for (size_t i = ring.nvars(); i-- > 0;)
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
    return false;
  };
  return opts;
}

std::optional<bool> validate_deformation(const DeformationFamily& Y,
                                         const FatPoint& Z) {
  if (!Z.is_linear_jet()) return std::nullopt;
  const int n = Z.order();
  const PolyRing& R = Y.family_ring();
  auto t_idx = R.index_of(Y.t_params()[0]);
  Polynomial t = Polynomial::variable(R, *t_idx);
  std::vector<Polynomial> gens = Y.polys();
  gens.push_back(t.pow(static_cast<uint32_t>(n + 1)));
  Ideal IY(R, std::move(gens));
  for (int j = 1; j <= n; ++j) {
    Ideal lhs = quotient(IY, Ideal(R, {t.pow(static_cast<uint32_t>(j))}));
    Ideal rhs = ideal_sum(
        IY, Ideal(R, {t.pow(static_cast<uint32_t>(n + 1 - j))}));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace autoarc
