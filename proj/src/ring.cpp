#include "autoarc/ring.hpp"

#include <set>

namespace autoarc {

namespace {

// degrevlex on the exponent slice [lo, hi): higher total degree wins, ties by
// the smallest trailing difference (last nonzero entry of a-b negative => a>b).
int degrevlex_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                  size_t lo, size_t hi) {
  long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
            size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Degrevlex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

PolyRing::PolyRing(std::vector<std::string> vars, CoefficientField field,
                   MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw UnsupportedError("empty variable name");
    if (!seen.insert(v).second)
      throw UnsupportedError("duplicate variable name: " + v);
  }
  if (order.kind == MonomialOrder::Kind::Block && order.block > vars.size())
    throw UnsupportedError("block order eliminates more variables than exist");
  d_ = std::make_shared<Data>(Data{std::move(vars), field, order});
}

std::optional<size_t> PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < d_->vars.size(); ++i)
    if (d_->vars[i] == name) return i;
  return std::nullopt;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  const size_t n = nvars();
  switch (d_->order.kind) {
    case MonomialOrder::Kind::Degrevlex:
      return degrevlex_cmp(ea, eb, 0, n);
    case MonomialOrder::Kind::Lex:
      return lex_cmp(ea, eb, 0, n);
    case MonomialOrder::Kind::Block: {
      int c = degrevlex_cmp(ea, eb, 0, d_->order.block);
      if (c != 0) return c;
      return degrevlex_cmp(ea, eb, d_->order.block, n);
    }
  }
  return 0;
}

std::string PolyRing::render(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (size_t i = 0; i < nvars(); ++i) {
    uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool PolyRing::operator==(const PolyRing& o) const {
  if (d_ == o.d_) return true;
  return d_->vars == o.d_->vars && d_->field == o.d_->field &&
         d_->order == o.d_->order;
}

}  // namespace autoarc
