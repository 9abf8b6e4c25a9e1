#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "autoarc/errors.hpp"

namespace autoarc {

/// Exponent vector with cached total degree. The vector length always equals
/// the number of ring variables.
class Monomial {
 public:
  explicit Monomial(std::vector<uint32_t> exps)
      : exps_(std::move(exps)),
        degree_(std::accumulate(exps_.begin(), exps_.end(), uint32_t{0})) {}

  static Monomial one(size_t nvars) {
    return Monomial(std::vector<uint32_t>(nvars, 0));
  }

  uint32_t degree() const { return degree_; }
  size_t nvars() const { return exps_.size(); }
  uint32_t exponent(size_t i) const { return exps_[i]; }
  const std::vector<uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const {
    std::vector<uint32_t> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Exact quotient this / o; caller guarantees divisibility.
  Monomial divide(const Monomial& o) const {
    std::vector<uint32_t> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < o.exps_[i]) throw InvariantError("inexact monomial division");
      e[i] -= o.exps_[i];
    }
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<uint32_t> e(a.exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<uint32_t> e(a.exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  Monomial squarefree_part() const {
    std::vector<uint32_t> e(exps_);
    for (auto& x : e) x = x > 0 ? 1 : 0;
    return Monomial(std::move(e));
  }

  bool is_squarefree() const {
    for (auto x : exps_)
      if (x > 1) return false;
    return true;
  }

  Monomial pow(uint32_t k) const {
    std::vector<uint32_t> e(exps_);
    for (auto& x : e) x *= k;
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<uint32_t> exps_;
  uint32_t degree_;
};

}  // namespace autoarc
