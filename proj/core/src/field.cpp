#include "rrlab/field.hpp"

#include <utility>

namespace rrlab {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t egcd_inverse(std::uint64_t a, std::uint64_t p) {
  // p prime, 0 < a < p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw Error("prime field characteristic must be below 2^31, got " + std::to_string(p));
  if (!is_prime_u64(p))
    throw Error("field characteristic must be prime, got " + std::to_string(p));
  return Field(FieldKind::Prime, p);
}

Coeff Field::zero() const {
  return kind_ == FieldKind::Prime ? Coeff::residue(0) : Coeff::rational(mpq_class(0));
}

Coeff Field::one() const {
  return kind_ == FieldKind::Prime ? Coeff::residue(1 % p_) : Coeff::rational(mpq_class(1));
}

Coeff Field::from_integer(long long n) const {
  if (kind_ == FieldKind::Rationals) return Coeff::rational(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Coeff::residue(static_cast<std::uint64_t>(r));
}

Coeff Field::from_fraction(long long num, unsigned long long den) const {
  if (den == 0) throw Error("zero denominator in rational coefficient");
  if (kind_ == FieldKind::Rationals) {
    mpq_class q(static_cast<long>(num), static_cast<unsigned long>(den));
    q.canonicalize();
    return Coeff::rational(q);
  }
  const Coeff d = from_integer(static_cast<long long>(den));
  if (is_zero(d))
    throw Error("denominator " + std::to_string(den) + " vanishes in F_" + std::to_string(p_));
  return mul(from_integer(num), inv(d));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Prime) {
    std::uint64_t s = a.residue_value() + b.residue_value();
    if (s >= p_) s -= p_;
    return Coeff::residue(s);
  }
  return Coeff::rational(a.rational_value() + b.rational_value());
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Prime) {
    std::uint64_t av = a.residue_value(), bv = b.residue_value();
    return Coeff::residue(av >= bv ? av - bv : av + p_ - bv);
  }
  return Coeff::rational(a.rational_value() - b.rational_value());
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Prime)
    return Coeff::residue((a.residue_value() * b.residue_value()) % p_);
  return Coeff::rational(a.rational_value() * b.rational_value());
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == FieldKind::Prime) {
    const std::uint64_t v = a.residue_value();
    return Coeff::residue(v == 0 ? 0 : p_ - v);
  }
  return Coeff::rational(-a.rational_value());
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw Error("division by zero in coefficient field");
  if (kind_ == FieldKind::Prime)
    return Coeff::residue(egcd_inverse(a.residue_value(), p_));
  return Coeff::rational(1 / a.rational_value());
}

bool Field::is_zero(const Coeff& a) const {
  return kind_ == FieldKind::Prime ? a.residue_value() == 0 : a.rational_value() == 0;
}

bool Field::is_one(const Coeff& a) const {
  return kind_ == FieldKind::Prime ? a.residue_value() == 1 % p_ : a.rational_value() == 1;
}

Coeff Field::random_nonzero(Rng& rng) const {
  if (kind_ == FieldKind::Prime) return Coeff::residue(1 + rng.below(p_ - 1));
  const long v = static_cast<long>(1 + rng.below(999));
  return Coeff::rational(mpq_class(rng.below(2) == 0 ? v : -v));
}

std::string Field::to_string(const Coeff& a) const {
  if (kind_ == FieldKind::Prime) return std::to_string(a.residue_value());
  return a.rational_value().get_str();
}

}  // namespace rrlab
