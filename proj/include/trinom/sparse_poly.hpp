#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "trinom/dyadic.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

struct Monomial {
  mpz_class c;
  std::int64_t e = 0;
};

/// A short integer polynomial with huge exponents.  Terms are kept sorted by
/// exponent with nonzero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<Monomial> terms);
  static SparsePoly of(const Trinomial& f);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t degree() const { return terms_.empty() ? 0 : terms_.back().e; }

  SparsePoly derivative() const;

  /// Outward-rounded value over an interval.
  DyadicInterval eval(const DyadicInterval& x, std::int64_t prec) const;
  /// Exact value at a rational point.  ResourceError if the result would
  /// need more than `max_bits` bits.
  mpq_class eval_exact(const mpq_class& x, std::int64_t max_bits = std::int64_t{1} << 24) const;

 private:
  std::vector<Monomial> terms_;
};

}  // namespace trinom
