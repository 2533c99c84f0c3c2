#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "rrlab/errors.hpp"
#include "rrlab/rng.hpp"

namespace rrlab {

/// A coefficient: a residue in a prime field (stored as the least
/// non-negative representative) or an exact rational. Which alternative
/// is live is fixed by the ring's Field; all arithmetic goes through
/// Field so the representation stays canonical.
class Coeff {
public:
  Coeff() : v_(std::uint64_t{0}) {}
  static Coeff residue(std::uint64_t r) { return Coeff(r); }
  static Coeff rational(mpq_class q) { return Coeff(std::move(q)); }

  bool is_residue() const { return v_.index() == 0; }
  std::uint64_t residue_value() const { return std::get<0>(v_); }
  const mpq_class& rational_value() const { return std::get<1>(v_); }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

private:
  explicit Coeff(std::uint64_t r) : v_(r) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}
  std::variant<std::uint64_t, mpq_class> v_;
};

enum class FieldKind { Prime, Rationals };

/// Coefficient field: F_p for a prime p < 2^31, or the rationals.
/// Performs all arithmetic on Coeff values; ring operations never touch
/// the representation directly.
class Field {
public:
  /// Prime field; throws Error unless p is a prime in [2, 2^31).
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(FieldKind::Rationals, 0); }

  FieldKind kind() const { return kind_; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_integer(long long n) const;
  /// num/den with den > 0; in F_p throws Error when den vanishes mod p.
  Coeff from_fraction(long long num, unsigned long long den) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  /// Multiplicative inverse; throws Error on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;

  /// Uniform draw from the nonzero elements (rationals: nonzero
  /// integers in [-999, 999]).
  Coeff random_nonzero(Rng& rng) const;

  std::string to_string(const Coeff& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;  // 0 for rationals
};

}  // namespace rrlab
