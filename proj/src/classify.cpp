#include "autoarc/classify.hpp"

#include <algorithm>

namespace autoarc {

StrengthVerdict classify_deformation(const ArcSystem& S, const Ideal& X_sing) {
  StrengthVerdict out;
  Ideal V = pi_singular_preimage(S, X_sing);
  if (groebner_basis(V).is_unit_ideal()) {
    out.cls = DeformationClass::VeryStrong;
    out.vacuous = true;
    out.det_membership = true;
    for (const auto& e : S.endo_vars()) out.witnesses.push_back({e, true});
    return out;
  }

  bool all_member = true;
  for (const auto& e : S.endo_vars()) {
    Polynomial ev = Polynomial::variable(S.ring(), *S.ring().index_of(e));
    bool member = radical_membership(ev, V);
    out.witnesses.push_back({e, member});
    if (!member && out.failing_var.empty()) out.failing_var = e;
    if (!member) all_member = false;
  }

  // Linear part of the endomorphism on m/m^2: entry (j,i) is the coefficient
  // of the i-th degree-one basis element in t_j's image.
  const FatPoint& Z = S.fat_point();
  auto deg1 = Z.degree_one_indices();
  const size_t r = Z.germ_vars().size();
  if (deg1.size() == r && r > 0) {
    std::vector<std::vector<Polynomial>> L(
        r, std::vector<Polynomial>(r, Polynomial::zero(S.ring())));
    for (size_t j = 1; j <= r; ++j) {
      for (size_t i = 0; i < r; ++i) {
        size_t m = deg1[i] + 1;  // 1-based basis index
        std::string name = "e_" + std::to_string(j) + "_" + std::to_string(m);
        auto idx = S.ring().index_of(name);
        if (idx) L[j - 1][i] = Polynomial::variable(S.ring(), *idx);
      }
    }
    Polynomial det = determinant(L);
    out.det_membership = det.is_zero() ? true : radical_membership(det, V);
  } else {
    out.det_membership = all_member;
  }

  if (Z.is_linear_jet()) {
    // Strong and very strong coincide over linear jets; report "strong".
    out.cls = all_member ? DeformationClass::Strong : DeformationClass::Weak;
  } else if (all_member) {
    out.cls = DeformationClass::VeryStrong;
  } else if (out.det_membership) {
    out.cls = DeformationClass::Strong;
  } else {
    out.cls = DeformationClass::Weak;
  }
  return out;
}

namespace {

// Template truncation: drop terms of t-degree >= n+1 (what the quotient by
// t^(n+1) would do), used for the tower-coherence check.
Polynomial truncate_template(const Polynomial& f, const PolyRing& ring,
                             const std::vector<std::string>& t_params,
                             int order) {
  std::vector<size_t> t_idx;
  for (const auto& t : t_params) t_idx.push_back(*ring.index_of(t));
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    uint32_t tdeg = 0;
    for (size_t i : t_idx) tdeg += t.mon.exponent(i);
    if (tdeg <= static_cast<uint32_t>(order)) kept.push_back(t);
  }
  return Polynomial::from_terms(ring, kept);
}

}  // namespace

std::vector<DefectRow> defect_table(const DeformationFamily& family, int n_min,
                                    int n_max,
                                    const std::optional<GermSpec>& germ) {
  if (n_min < 1 || n_max < n_min)
    throw UnsupportedError("defect table needs a nonempty order range from 1");
  const Ideal& X = family.central_fiber();
  long d = krull_dimension(X);
  Ideal X_sing = singular_locus(X);
  std::string fp = family.fingerprint();

  std::vector<DefectRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    FatPoint Z = germ ? make_germ_jet(germ->vars, germ->ideal, n)
                      : make_linear_jet(n, family.family_ring().field(),
                                        family.t_params()[0]);
    // Tower coherence: the system built from the template truncated at this
    // order must agree with the system built from the full template.
    if (!germ) {
      std::vector<Polynomial> truncated;
      for (const auto& f : family.polys())
        truncated.push_back(
            truncate_template(f, family.family_ring(), family.t_params(), n));
      DeformationFamily Yn(family.x_vars(), family.t_params(), truncated);
      ArcSystem S_full = build_arc_system(family, Z);
      ArcSystem S_trunc = build_arc_system(Yn, Z);
      if (!(S_full.ideal() == S_trunc.ideal()))
        throw InvariantError("family tower is not coherent at order " +
                             std::to_string(n));
    }

    ArcSystem S = build_arc_system(family, Z);
    ArcSystem endo = build_endo_system(Z);

    DefectRow row;
    row.n = n;
    row.length = static_cast<long>(Z.length());
    row.delta = krull_dimension(endo.ideal());
    row.dim_arc = krull_dimension(S.ideal());
    row.d = d;
    row.fingerprint = fp;
    row.validated = validate_deformation(family, Z);

    Ideal V = pi_singular_preimage(S, X_sing);
    if (!groebner_basis(V).is_unit_ideal())
      row.dim_v = krull_dimension(V);

    mpq_class l(row.length);
    if (row.dim_v) row.phi = mpq_class(*row.dim_v) / l - row.d;
    row.dstar = mpq_class(row.dim_arc) / l - row.d;
    row.e_term = mpq_class(row.delta) / l;
    if (row.delta != 0)
      row.r_term =
          mpq_class(row.dim_arc - row.d * row.length) / mpq_class(row.delta);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool check_weak_curve_bounds(const DefectRow& row, bool purity,
                             bool irreducible) {
  if (row.d != 1)
    throw UnsupportedError("weak-curve bounds apply to curves only");
  (void)purity;
  (void)irreducible;
  if (!row.dim_v) return false;
  long v = *row.dim_v;
  return row.n + 2 <= v && v <= 2L * row.n;
}

long MotivicExpr::virtual_dimension() const {
  long best = std::numeric_limits<long>::min();
  for (const auto& t : terms) best = std::max(best, t.virtual_dimension());
  return best;
}

MotivicExpr MotivicExpr::plus(const MotivicExpr& o) const {
  MotivicExpr out = *this;
  for (const auto& t : o.terms) {
    bool merged = false;
    for (auto& u : out.terms) {
      if (u.tag == t.tag && u.power == t.power && u.dim_tag == t.dim_tag) {
        u.coefficient += t.coefficient;
        merged = true;
        break;
      }
    }
    if (!merged) out.terms.push_back(t);
  }
  out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                 [](const MotivicTerm& t) {
                                   return t.coefficient == 0;
                                 }),
                  out.terms.end());
  return out;
}

MotivicExpr MotivicExpr::shift(long k) const {
  MotivicExpr out = *this;
  for (auto& t : out.terms) t.power += k;
  return out;
}

MotivicSequence motivic_sequence(const std::vector<DefectRow>& rows) {
  MotivicSequence out;
  for (const auto& row : rows) {
    long norm = row.d * row.length + row.delta;
    MotivicExpr expr;
    // closure of the smooth part: dimension d*l+delta, normalized to virtual
    // dimension zero
    expr.terms.push_back(
        MotivicTerm{"[smooth-closure_" + std::to_string(row.n) + "]", 1, norm,
                    -norm});
    if (row.dim_v) {
      expr.terms.push_back(MotivicTerm{"[V_" + std::to_string(row.n) + "]", 1,
                                       *row.dim_v, -norm});
      out.singular_virtual_dims.push_back(*row.dim_v - norm);
    }
    out.exprs.push_back(std::move(expr));
  }
  for (size_t i = 1; i < out.singular_virtual_dims.size(); ++i)
    if (out.singular_virtual_dims[i] >= out.singular_virtual_dims[i - 1])
      out.convergence = false;
  return out;
}

}  // namespace autoarc
