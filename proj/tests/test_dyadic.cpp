#include <cmath>
#include <random>

#include "doctest.h"
#include "mpfr_util.hpp"
#include "trinom/dyadic.hpp"

using namespace trinom;
using testutil::Real;

namespace {

// ln 2 = sum_{k>=1} 1 / (k 2^k): an exact-rational series independent of the
// atanh route used by the kernel.  Returns [lo, hi] with hi - lo = tail bound.
std::pair<mpq_class, mpq_class> ln2_oracle(int terms) {
  mpq_class sum = 0;
  mpq_class pow2 = 1;
  for (int k = 1; k <= terms; ++k) {
    pow2 /= 2;
    sum += pow2 / k;
  }
  // tail <= sum_{k>terms} 2^-k = 2^-terms
  return {sum, sum + pow2};
}

// e = sum 1/k!, tail < 2/(n+1)!.
std::pair<mpq_class, mpq_class> e_oracle(int terms) {
  mpq_class sum = 0;
  mpq_class t = 1;
  for (int k = 0; k <= terms; ++k) {
    if (k > 0) t /= k;
    sum += t;
  }
  return {sum, sum + 2 * t / (terms + 1)};
}

bool holds(const DyadicInterval& iv, const mpq_class& lo, const mpq_class& hi) {
  return iv.contains(lo) && iv.contains(hi);
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 1'000'000'000L);
  std::uniform_int_distribution<int> shift(0, 40);
  mpz_class n = num(rng);
  mpz_class d = num(rng);
  if (rng() & 1) n <<= shift(rng);
  if (rng() & 1) d <<= shift(rng);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

void mpfr_log(Real& out, const mpq_class& x, mpfr_rnd_t rnd) {
  Real xx(2048);
  mpfr_set_q(xx.get(), x.get_mpq_t(), rnd);
  mpfr_log(out.get(), xx.get(), rnd);
}

}  // namespace

TEST_CASE("dyadic canonical form and exact arithmetic") {
  Dyadic a(12);
  CHECK(a.mantissa() == 3);
  CHECK(a.exponent() == 2);
  CHECK(Dyadic(0).exponent() == 0);
  CHECK((Dyadic(3) * Dyadic(mpz_class(5), -3)).to_rational() == mpq_class(15, 8));
  CHECK(Dyadic(mpz_class(1), -4) < Dyadic(mpz_class(3), -5));
  CHECK(Dyadic(-2) < Dyadic(mpz_class(1), -100));
  CHECK(compare(Dyadic(mpz_class(1), -1), mpq_class(1, 3)) > 0);
  CHECK(compare(Dyadic(mpz_class(1), -2), mpq_class(1, 4)) == 0);
  CHECK(floor_log2(mpq_class(1, 3)) == -2);
  CHECK(floor_log2(mpq_class(8)) == 3);
  CHECK(floor_log2(mpq_class(7)) == 2);
}

TEST_CASE("rounding is directed and add survives huge exponent gaps") {
  const Dyadic third_lo = from_rational(mpq_class(1, 3), 20, Round::down);
  const Dyadic third_hi = from_rational(mpq_class(1, 3), 20, Round::up);
  CHECK(compare(third_lo, mpq_class(1, 3)) < 0);
  CHECK(compare(third_hi, mpq_class(1, 3)) > 0);
  CHECK(third_lo.bit_length() <= 20);

  const Dyadic tiny(mpz_class(1), -(std::int64_t{1} << 40));
  const Dyadic up = add(Dyadic(1), tiny, 64, Round::up);
  const Dyadic down = add(Dyadic(1), tiny, 64, Round::down);
  CHECK(Dyadic(1) < up);
  CHECK(down == Dyadic(1));
  CHECK(up.bit_length() <= 64);
  const Dyadic down2 = add(Dyadic(1), -tiny, 64, Round::down);
  CHECK(down2 < Dyadic(1));
}

TEST_CASE("log_approx examples") {
  SUBCASE("ln 1 = 0") {
    const DyadicInterval l = log_approx(1, {20});
    CHECK(l.contains(Dyadic(0)));
    CHECK(!(Dyadic(mpz_class(1), -20) < l.width()));
  }
  SUBCASE("ln 2 against the 1/(k 2^k) series") {
    const auto [lo, hi] = ln2_oracle(80);
    const DyadicInterval l = log_approx(2, {20});
    CHECK(holds(l, lo, hi));
    CHECK(*l.relative_width() <= std::ldexp(1.0, -19));
  }
  SUBCASE("ln(1/2) is the negation of ln 2") {
    const auto [lo, hi] = ln2_oracle(80);
    const DyadicInterval l = log_approx(mpq_class(1, 2), {20});
    CHECK(holds(l, -hi, -lo));
  }
  SUBCASE("nonpositive input") {
    CHECK_THROWS_AS(log_approx(0, {20}), DomainError);
    CHECK_THROWS_AS(log_approx(-3, {20}), DomainError);
  }
}

TEST_CASE("log magnitude by-product") {
  CHECK(log_magnitude(2) == 0);                          // |ln 2| < 1
  CHECK(log_magnitude(mpq_class(1, 1000)) == 2);         // ln 1000 = 6.9
  CHECK(log_magnitude(mpz_class(1) << 1000) == 9);       // 693.1
}

TEST_CASE("exp_approx examples") {
  CHECK(exp_approx(DyadicInterval(Dyadic(0)), {20}).contains(Dyadic(1)));
  const DyadicInterval l2 = log_approx(2, {80});
  const DyadicInterval two = exp_approx(l2, {80});
  CHECK(two.contains(Dyadic(2)));
  const auto [elo, ehi] = e_oracle(60);
  const DyadicInterval e = exp_approx(DyadicInterval(Dyadic(1)), {64});
  CHECK(holds(e, elo, ehi));
  CHECK(*e.relative_width() <= std::ldexp(1.0, -63));
}

TEST_CASE("pow_int examples") {
  CHECK(pow_int(mpq_class(3, 2), 2, {32}).contains(mpq_class(9, 4)));
  const DyadicInterval p = pow_int(2, 10, {32});
  CHECK(p.is_point());
  CHECK(p.lo() == Dyadic(1024));
  // 2^20 * log2(1.5) = 613377.639... (mpmath, 30 digits)
  const DyadicInterval big = pow_int(mpq_class(3, 2), std::uint64_t{1} << 20, {32});
  CHECK(big.lo().magnitude() == 613377);
  CHECK(big.hi().magnitude() == 613377);
  CHECK(*big.relative_width() <= std::ldexp(1.0, -31));
}

TEST_CASE("containment property for log against an MPFR reference") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> bits(8, 300);
  for (int i = 0; i < 400; ++i) {
    const mpq_class x = random_rational(rng);
    const int b = bits(rng);
    const DyadicInterval l = log_approx(x, {b});
    Real lo(4096), hi(4096);
    mpfr_log(lo, x, MPFR_RNDD);
    mpfr_log(hi, x, MPFR_RNDU);
    REQUIRE(testutil::contains(l, lo, hi));
    if (x != 1) CHECK(*l.relative_width() <= std::ldexp(1.0, 1 - b));
  }
}

TEST_CASE("monotone refinement: more bits never loosens the guarantee") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const mpq_class x = random_rational(rng);
    if (x == 1) continue;
    double prev = 1.0;
    for (int b = 16; b <= 512; b *= 2) {
      const double w = *log_approx(x, {b}).relative_width();
      CHECK(w <= std::ldexp(1.0, 1 - b));
      CHECK(w <= prev);
      prev = w;
    }
  }
}

TEST_CASE("exp(log x) contains x") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const mpq_class x = random_rational(rng);
    const DyadicInterval round_trip = exp_approx(log_approx(x, {96}), {96});
    REQUIRE(round_trip.contains(x));
    CHECK(*round_trip.relative_width() < 1e-25);
  }
}

TEST_CASE("interval arithmetic keeps exact images") {
  const DyadicInterval a(Dyadic(-3), Dyadic(2));
  const DyadicInterval b(Dyadic(5), Dyadic(7));
  const DyadicInterval p = mul(a, b, 32);
  CHECK(p.lo() == Dyadic(-21));
  CHECK(p.hi() == Dyadic(14));
  const DyadicInterval q = div(b, add(a, DyadicInterval(Dyadic(10)), 32), 32);  // [5,7]/[7,12]
  CHECK(q.contains(mpq_class(5, 12)));
  CHECK(q.contains(mpq_class(1)));
  CHECK_THROWS_AS(div(b, a, 32), DomainError);
  const DyadicInterval sq = pow(a, 2, 32);
  CHECK(sq.lo() == Dyadic(0));
  CHECK(sq.hi() == Dyadic(9));
  CHECK(pow(a, 3, 32).lo() == Dyadic(-27));
}

TEST_CASE("simplest dyadic in an interval") {
  CHECK(simplest(DyadicInterval(Dyadic(-1), Dyadic(3))) == Dyadic(0));
  CHECK(simplest(DyadicInterval(Dyadic(3), Dyadic(5))) == Dyadic(4));
  CHECK(simplest(DyadicInterval(Dyadic(-5), Dyadic(-3))) == Dyadic(-4));
  CHECK(simplest(DyadicInterval(Dyadic(5))) == Dyadic(5));
  const DyadicInterval sqrt2 = pow_int(2, 1, {8});
  CHECK(simplest(sqrt2) == Dyadic(2));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const DyadicInterval iv = log_approx(random_rational(rng), {std::int64_t(rng() % 200 + 4)});
    const Dyadic s = simplest(iv);
    REQUIRE(iv.contains(s));
    // s = M 2^E with M odd; s +- 2^E are multiples of 2^(E+1), so one must be outside.
    if (!s.is_zero()) {
      const Dyadic down = Dyadic(mpz_class(s.mantissa() - 1), s.exponent());
      const Dyadic up = Dyadic(mpz_class(s.mantissa() + 1), s.exponent());
      CHECK((!iv.contains(down) || !iv.contains(up)));
    }
  }
}
