#include "autoarc/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace autoarc {

namespace {

struct DescendingCmp {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ring->compare(a, b) > 0;
  }
};

}  // namespace

void Polynomial::check_guards() const {
  if (terms_.size() > kMaxTerms)
    throw ResourceError("polynomial exceeds " + std::to_string(kMaxTerms) +
                        " terms");
  if (!terms_.empty() && total_degree() > kMaxTotalDegree)
    throw ResourceError("polynomial exceeds total degree " +
                        std::to_string(kMaxTotalDegree));
}

Polynomial Polynomial::from_terms(const PolyRing& ring,
                                  std::vector<Term> terms) {
  const auto& k = ring.field();
  std::map<Monomial, Coeff, DescendingCmp> acc{DescendingCmp{&ring}};
  for (auto& t : terms) {
    if (t.mon.nvars() != ring.nvars())
      throw InvariantError("term has wrong number of variables");
    Coeff c = k.reduce(t.coeff);
    if (c == 0) continue;
    auto [it, inserted] = acc.emplace(std::move(t.mon), c);
    if (!inserted) {
      it->second = k.add(it->second, c);
      if (it->second == 0) acc.erase(it);
    }
  }
  Polynomial out(ring);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) out.terms_.push_back(Term{m, c});
  out.check_guards();
  return out;
}

Polynomial Polynomial::constant(const PolyRing& ring, const Coeff& c) {
  return from_terms(ring, {Term{Monomial::one(ring.nvars()), c}});
}

Polynomial Polynomial::variable(const PolyRing& ring, size_t index) {
  std::vector<uint32_t> e(ring.nvars(), 0);
  e[index] = 1;
  return from_terms(ring, {Term{Monomial(std::move(e)), Coeff(1)}});
}

Polynomial Polynomial::monomial_poly(const PolyRing& ring, Monomial m,
                                     const Coeff& c) {
  return from_terms(ring, {Term{std::move(m), c}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvariantError("leading term of zero polynomial");
  return terms_.front();
}

uint32_t Polynomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (ring_ != o.ring_) throw InvariantError("ring mismatch in +");
  const auto& k = ring_.field();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_.compare(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.terms_.push_back(Term{terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  out.check_guards();
  return out;
}

Polynomial Polynomial::operator-() const {
  const auto& k = ring_.field();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mon, k.neg(t.coeff)});
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  const auto& k = ring_.field();
  Coeff cc = k.reduce(c);
  if (cc == 0) return zero(ring_);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    out.terms_.push_back(Term{t.mon * m, k.mul(t.coeff, cc)});
  out.check_guards();
  return out;
}

Polynomial Polynomial::mul_scalar(const Coeff& c) const {
  return mul_term(Monomial::one(ring_.nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (ring_ != o.ring_) throw InvariantError("ring mismatch in *");
  const auto& k = ring_.field();
  std::map<Monomial, Coeff, DescendingCmp> acc{DescendingCmp{&ring_}};
  const Polynomial& a = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& b = terms_.size() <= o.terms_.size() ? o : *this;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.mon * tb.mon;
      Coeff c = k.mul(ta.coeff, tb.coeff);
      if (c == 0) continue;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) {
        it->second = k.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      }
      if (acc.size() > kMaxTerms)
        throw ResourceError("product exceeds term guard");
    }
  }
  Polynomial out(ring_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) out.terms_.push_back(Term{m, c});
  out.check_guards();
  return out;
}

Polynomial Polynomial::pow(uint32_t e) const {
  Polynomial out = constant(ring_, Coeff(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const auto& k = ring_.field();
  return mul_scalar(k.inv(leading_coeff()));
}

Polynomial Polynomial::derivative(size_t v) const {
  const auto& k = ring_.field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    uint32_t e = t.mon.exponent(v);
    if (e == 0) continue;
    Coeff c = k.mul(t.coeff, k.from_long(static_cast<long>(e)));
    if (c == 0) continue;
    std::vector<uint32_t> exps = t.mon.exponents();
    exps[v] -= 1;
    out.push_back(Term{Monomial(std::move(exps)), c});
  }
  return from_terms(ring_, std::move(out));
}

uint32_t Polynomial::degree_in(size_t v) const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.exponent(v));
  return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = a.ring_.compare(a.terms_[i].mon, b.terms_[i].mon);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::vector<std::vector<Polynomial>> jacobian_matrix(
    const std::vector<Polynomial>& polys,
    const std::vector<size_t>& var_indices) {
  if (polys.empty()) return {};
  std::vector<std::vector<Polynomial>> out;
  for (const auto& p : polys) {
    std::vector<Polynomial> row;
    for (size_t v : var_indices) row.push_back(p.derivative(v));
    out.push_back(std::move(row));
  }
  return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  if (m.empty()) throw InvariantError("determinant of empty matrix");
  const PolyRing& ring = m[0][0].ring();
  std::function<Polynomial(std::vector<size_t>, std::vector<size_t>)> det =
      [&](std::vector<size_t> rows, std::vector<size_t> cols) -> Polynomial {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    Polynomial acc = Polynomial::zero(ring);
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (m[rows[0]][cols[j]].is_zero()) continue;
      std::vector<size_t> sub_cols;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != j) sub_cols.push_back(cols[t]);
      Polynomial contrib = m[rows[0]][cols[j]] * det(sub_rows, sub_cols);
      acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
  };
  std::vector<size_t> rows(m.size()), cols(m.size());
  for (size_t i = 0; i < m.size(); ++i) rows[i] = cols[i] = i;
  return det(rows, cols);
}

std::vector<std::vector<size_t>> index_subsets(size_t n, size_t k) {
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

Polynomial ring_map(const Polynomial& f, const PolyRing& target,
                    const std::map<std::string, Polynomial>& bindings) {
  const auto& src = f.ring();
  const auto& k = target.field();
  // Resolve the image of every source variable once.
  std::vector<Polynomial> images;
  images.reserve(src.nvars());
  for (size_t i = 0; i < src.nvars(); ++i) {
    auto it = bindings.find(src.var(i));
    if (it != bindings.end()) {
      if (it->second.ring() != target)
        throw InvariantError("binding target lives in a different ring");
      images.push_back(it->second);
    } else {
      auto idx = target.index_of(src.var(i));
      if (!idx) {
        // Tolerated as long as the variable never occurs in f.
        images.push_back(Polynomial::zero(target));
        if (f.uses_var(i))
          throw InvariantError("target ring missing variable " + src.var(i));
      } else {
        images.push_back(Polynomial::variable(target, *idx));
      }
    }
  }
  Polynomial out = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, k.reduce(t.coeff));
    for (size_t i = 0; i < src.nvars(); ++i) {
      uint32_t e = t.mon.exponent(i);
      if (e == 0) continue;
      term = term * images[i].pow(e);
    }
    out = out + term;
  }
  return out;
}

}  // namespace autoarc
