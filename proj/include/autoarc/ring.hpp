#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "autoarc/field.hpp"
#include "autoarc/monomial.hpp"

namespace autoarc {

/// Monomial orders. Variable comparison is by position in the declared list:
/// the first variable is the largest. block(k) is the elimination order that
/// ranks any monomial containing one of the first k variables above any
/// monomial free of them (degrevlex within each block).
struct MonomialOrder {
  enum class Kind { Degrevlex, Lex, Block };
  Kind kind = Kind::Degrevlex;
  size_t block = 0;  // number of eliminated (leading) variables for Block

  static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_elim(size_t k) { return {Kind::Block, k}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::Block || block == o.block);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  std::string name() const;
};

/// Immutable polynomial ring handle: named variables over an exact field with
/// a monomial order. Cheap to copy; equality is structural.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, CoefficientField field,
           MonomialOrder order = MonomialOrder::degrevlex());

  size_t nvars() const { return d_->vars.size(); }
  const std::vector<std::string>& vars() const { return d_->vars; }
  const std::string& var(size_t i) const { return d_->vars[i]; }
  std::optional<size_t> index_of(const std::string& name) const;
  const CoefficientField& field() const { return d_->field; }
  const MonomialOrder& order() const { return d_->order; }

  /// Returns >0 if a > b, 0 if equal, <0 if a < b under the ring's order.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string render(const Monomial& m) const;

  bool operator==(const PolyRing& o) const;
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> vars;
    CoefficientField field;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace autoarc
