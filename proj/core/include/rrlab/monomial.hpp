#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rrlab/errors.hpp"

namespace rrlab {

/// Dense exponent vector. Arity is fixed by the ambient ring; all
/// binary operations require equal arity.
class Monomial {
public:
  explicit Monomial(std::size_t arity) : e_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

  std::size_t arity() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x != 0) return false;
    return true;
  }

  static Monomial product(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  static bool divides(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a.e_[i] > b.e_[i]) return false;
    return true;
  }

  /// b / a; requires divides(a, b).
  static Monomial quotient(const Monomial& b, const Monomial& a) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (a.e_[i] > b.e_[i]) throw InternalError("monomial quotient is not exact");
      r.e_[i] = b.e_[i] - a.e_[i];
    }
    return r;
  }

  /// Exponentwise max(b - a, 0); the generator of (b) : (a).
  static Monomial colon_quotient(const Monomial& b, const Monomial& a) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
      r.e_[i] = b.e_[i] > a.e_[i] ? b.e_[i] - a.e_[i] : 0;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Order-free tie-breaker for containers; not a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
  static void check_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity())
      throw RingMismatchError("monomial arity mismatch: " + std::to_string(a.arity()) +
                              " vs " + std::to_string(b.arity()));
  }
  std::vector<std::uint32_t> e_;
};

enum class OrderKind { Grevlex, Lex, Block };

/// Total multiplicative monomial order.
///
/// Grevlex: higher total degree wins; on ties scan exponents from the
/// last variable backwards, and the first smaller exponent is greater.
/// Lex: scan from the first variable, larger exponent wins.
/// Block elimination: the leading block (a variable prefix) is compared
/// by grevlex first, then the remaining variables by grevlex.
class MonomialOrder {
public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder block_elimination(std::size_t leading_block) {
    return MonomialOrder(OrderKind::Block, leading_block);
  }

  OrderKind kind() const { return kind_; }
  std::size_t leading_block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

private:
  MonomialOrder(OrderKind k, std::size_t block) : kind_(k), block_(block) {}
  OrderKind kind_;
  std::size_t block_;
};

}  // namespace rrlab
