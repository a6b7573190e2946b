#pragma once

// Adaptive-precision dyadic interval arithmetic.
//
// A Dyadic is mantissa * 2^exponent with an arbitrary-size mantissa.  Single
// Dyadic products are exact; everything that can blow up (sums across wide
// exponent gaps, quotients, transcendental functions) goes through the
// rounding entry points, which take a mantissa budget in bits and a direction.
// DyadicInterval operations always round outward, so the exact image of the
// inputs is contained in every result.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "trinom/errors.hpp"

namespace trinom {

struct PrecisionRequest {
  std::int64_t bits = 64;
  std::int64_t cap_bits = std::int64_t{1} << 16;
};

enum class Round { down, up };

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor)
  explicit Dyadic(const mpz_class& mantissa, std::int64_t exponent = 0);

  const mpz_class& mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }

  int sign() const { return sgn(mant_); }
  bool is_zero() const { return sign() == 0; }
  std::int64_t bit_length() const;
  /// floor(log2 |x|); undefined for zero.
  std::int64_t magnitude() const;

  /// Exact conversion.  Throws ResourceError if the exponent is so large
  /// that the rational would not fit in memory.
  mpq_class to_rational() const;
  double to_double() const;
  std::string to_string() const;

  /// x * 2^k, exact.
  Dyadic shifted(std::int64_t k) const;
  Dyadic operator-() const;

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.mant_ == b.mant_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  mpz_class mant_;
  std::int64_t exp_ = 0;
};

/// Keep at most `prec` significant bits, rounding in the given direction.
Dyadic round(const Dyadic& x, std::int64_t prec, Round dir);
/// a + b rounded to `prec` bits.  Safe across arbitrary exponent gaps.
Dyadic add(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir);
Dyadic sub(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir);
Dyadic mul(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir);
Dyadic divide(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir);
Dyadic from_rational(const mpq_class& q, std::int64_t prec, Round dir);

/// Three-way comparison against a rational without materialising huge numbers.
int compare(const Dyadic& a, const mpq_class& q);

/// Exact floor(log2 q) for q > 0.
std::int64_t floor_log2(const mpq_class& q);

class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(const Dyadic& point) : lo_(point), hi_(point) {}  // NOLINT
  DyadicInterval(Dyadic lo, Dyadic hi);

  static DyadicInterval from_rational(const mpq_class& q, std::int64_t prec);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const mpq_class& q) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  /// +1 / -1 when the interval excludes zero, 0 for the exact point zero,
  /// nullopt when the sign is not determined.
  std::optional<int> sign() const;

  Dyadic width(std::int64_t prec = 64) const;
  Dyadic midpoint() const;
  /// Upper bound on width / min|x|; nullopt if the interval touches zero.
  std::optional<double> relative_width() const;
  std::string to_string() const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

DyadicInterval operator-(const DyadicInterval& x);
DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
/// Throws DomainError if the divisor contains zero.
DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec);
DyadicInterval mul_int(const DyadicInterval& a, const mpz_class& k, std::int64_t prec);
DyadicInterval div_int(const DyadicInterval& a, const mpz_class& k, std::int64_t prec);
DyadicInterval shifted(const DyadicInterval& a, std::int64_t k);
DyadicInterval abs(const DyadicInterval& a);
DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);
std::optional<DyadicInterval> intersect(const DyadicInterval& a, const DyadicInterval& b);
/// The dyadic in [lo, hi] with the largest power of two dividing it
/// (fewest significant bits); 0 if the interval contains zero.
Dyadic simplest(const DyadicInterval& a);
DyadicInterval widen(const DyadicInterval& a, const Dyadic& radius, std::int64_t prec);
/// x^e for an interval x, square-and-multiply with outward rounding.
DyadicInterval pow(const DyadicInterval& x, std::uint64_t e, std::int64_t prec);

/// Natural log of a positive interval at working precision `prec`.
DyadicInterval log(const DyadicInterval& x, std::int64_t prec);
/// e^x over an interval at working precision `prec`.
DyadicInterval exp(const DyadicInterval& x, std::int64_t prec);
/// ln 2 to `prec` bits.
DyadicInterval ln2(std::int64_t prec);

/// Interval containing ln(x) with relative width <= 2^(1-bits) (absolute
/// width <= 2^-bits when x = 1).  DomainError for x <= 0.
DyadicInterval log_approx(const mpq_class& x, const PrecisionRequest& req);
/// floor(log2 max{1, |ln x|}), the magnitude by-product of log_approx.
std::int64_t log_magnitude(const mpq_class& x);
/// Interval containing e^s for every s in t.
DyadicInterval exp_approx(const DyadicInterval& t, const PrecisionRequest& req);
/// Interval containing x^e with relative width <= 2^(1-bits); O(log e) work.
DyadicInterval pow_int(const mpq_class& x, std::uint64_t e, const PrecisionRequest& req);

/// The sign of an interval-valued computation could not be separated from
/// zero before the precision cap.
class UndecidedError : public Error {
 public:
  UndecidedError(const std::string& what, DyadicInterval narrowest, std::int64_t bits)
      : Error(what), narrowest_(std::move(narrowest)), bits_(bits) {}
  const DyadicInterval& narrowest() const { return narrowest_; }
  std::int64_t bits() const { return bits_; }

 private:
  DyadicInterval narrowest_;
  std::int64_t bits_;
};

}  // namespace trinom
