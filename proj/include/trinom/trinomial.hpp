#pragma once

// f(x) = c1 + c2 x^a2 + c3 x^a3 with nonzero integer coefficients.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "trinom/dyadic.hpp"
#include "trinom/logform.hpp"

namespace trinom {

inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 62;

struct Trinomial {
  mpz_class c1, c2, c3;
  std::int64_t a2 = 1, a3 = 2;

  Trinomial() : c1(1), c2(-1), c3(1) {}
  /// Validates: c_i nonzero with |c_i| < 2^63, 1 <= a2 < a3 <= 2^62.
  Trinomial(mpz_class c1, mpz_class c2, mpz_class c3, std::int64_t a2, std::int64_t a3);

  mpz_class height() const;
  std::int64_t degree() const { return a3; }
  std::array<int, 3> pattern() const { return {sgn(c1), sgn(c2), sgn(c3)}; }

  /// f(-x): c2, c3 pick up (-1)^a2, (-1)^a3.
  Trinomial reflected() const;
  /// x^a3 f(1/x).
  Trinomial reciprocal() const;
  Trinomial negated() const;

  friend bool operator==(const Trinomial&, const Trinomial&) = default;
};

/// A trinomial with gcd(a2, a3) = 1.  When `has_positive_roots`, the
/// pattern is (+,-,+) or (-,-,+); m = a2 and n = a3 in the series notation.
struct NormalizedTrinomial : Trinomial {
  bool has_positive_roots = true;
  std::int64_t m() const { return a2; }
  std::int64_t n() const { return a3; }
};

struct TransformTrace {
  std::int64_t delta = 1;
  int xflip = 1;  ///< -1 when y = 1/x was applied
  bool negated = false;
  bool argflip = false;  ///< x -> -x, set by the real-root driver
};

struct Normalized {
  NormalizedTrinomial f;
  TransformTrace trace;
};

Normalized normalize(const Trinomial& f);

/// "c1,c2,c3;a2,a3", whitespace allowed around tokens.
Trinomial parse_trinomial(std::string_view text);
std::string format_trinomial(const Trinomial& f);

/// The discriminant as a log form:
///   a3 ln|c2| + a2 ln a2 + (a3-a2) ln(a3-a2) - a3 ln a3 - (a3-a2) ln|c1| - a2 ln|c3|,
/// i.e. ln|P| - ln|Q| for Delta = P - Q.
LogLinearForm discriminant_form(const Trinomial& f);

/// sign(Delta), for any exponents; root counts read it with gcd(a2, a3) = 1.
SignResult discriminant_sign(const Trinomial& f, const PrecisionRequest& req = {});

struct RootCount {
  int count = 0;
  bool degenerate = false;
};

/// Positive-root count by sign pattern and sign(Delta); gcd(a2, a3) = 1.
RootCount count_positive_roots(const Trinomial& f, const PrecisionRequest& req = {});

/// Does f have a real root that is also a root of f'?  Any exponents.
bool has_degenerate_real_root(const Trinomial& f, const PrecisionRequest& req = {});

/// | |c2/a3| |(a3-a2)/c1|^((a3-a2)/a3) |a2/c3|^(a2/a3) - 1 | < 1/ln(a3 H)
/// and no degenerate real root.
bool is_ill_conditioned(const Trinomial& f, const PrecisionRequest& req = {});

struct NormBounds {
  DyadicInterval lo;  ///< contains (1/2) min{|c1/c2|^(1/a2), |c1/c3|^(1/a3)}
  DyadicInterval hi;  ///< contains 2 max{|c2/c3|^(1/(a3-a2)), |c1/c3|^(1/a3)}
};

/// Every complex root satisfies lo < |z| < hi.
NormBounds root_norm_bounds(const Trinomial& f, std::int64_t prec = 64);

struct SeriesParameters {
  DyadicInterval c;     ///< |c2| / (|c1|^((n-m)/n) |c3|^(m/n))
  DyadicInterval beta;  ///< |c1/c3|^(1/n)
  DyadicInterval r;     ///< n / (m^(m/n) (n-m)^((n-m)/n))
};

/// Relative width of each output is at most 1/(96 (n-1)^2) (1/96 for n = 2)
/// and at most 2^(1 - req.bits).
SeriesParameters series_parameters(const Trinomial& f, const PrecisionRequest& req = {});

/// |x|^(p/q) for a rational x != 0, relative width <= 2^(1-bits).
DyadicInterval rational_power(const mpq_class& x, std::int64_t p, std::int64_t q, std::int64_t bits);

}  // namespace trinom
