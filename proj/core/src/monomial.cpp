#include "rrlab/monomial.hpp"

namespace rrlab {

namespace {

// Grevlex restricted to the index range [lo, hi).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                   std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i))
      // Smaller exponent in the last differing position wins.
      return b.exponent(i) <=> a.exponent(i);
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity())
    throw RingMismatchError("monomial arity mismatch in order comparison");
  const std::size_t n = a.arity();
  switch (kind_) {
    case OrderKind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
      return std::strong_ordering::equal;
    case OrderKind::Block: {
      const std::size_t k = block_ < n ? block_ : n;
      if (auto c = grevlex_range(a, b, 0, k); c != std::strong_ordering::equal) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  throw InternalError("unreachable monomial order kind");
}

}  // namespace rrlab
