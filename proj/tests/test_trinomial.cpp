#include <numeric>
#include <random>

#include "doctest.h"
#include "trinom/trinomial.hpp"

using namespace trinom;

namespace {

mpz_class ipow(const mpz_class& b, std::int64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

int exact_delta_sign(const Trinomial& f) {
  const std::int64_t m = f.a2, n = f.a3;
  const mpz_class d = ipow(m, m) * ipow(n - m, n - m) * ipow(-f.c2, n) - ipow(n, n) * ipow(f.c1, n - m) * ipow(f.c3, m);
  return sgn(d);
}

bool near(const DyadicInterval& iv, double v, double tol) {
  return iv.lo().to_double() <= v + tol && iv.hi().to_double() >= v - tol && iv.hi().to_double() - iv.lo().to_double() < 1e-3;
}

}  // namespace

TEST_CASE("construction rejects invalid trinomials") {
  CHECK_THROWS_AS(Trinomial(0, 1, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(Trinomial(1, 1, 1, 2, 2), DomainError);
  CHECK_THROWS_AS(Trinomial(1, 1, 1, 0, 2), DomainError);
  CHECK_THROWS_AS(Trinomial(mpz_class(1) << 63, 1, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(Trinomial(1, 1, 1, 1, kMaxExponent + 1), DomainError);
  CHECK_NOTHROW(Trinomial(1, 1, 1, 1, kMaxExponent));
}

TEST_CASE("parse and format") {
  const Trinomial f = parse_trinomial(" 2, -3 ,1 ; 1,2 ");
  CHECK(f == Trinomial(2, -3, 1, 1, 2));
  CHECK(format_trinomial(f) == "2,-3,1;1,2");
  const Trinomial big = parse_trinomial("-9223372036854775807,+5,7;3,4611686018427387904");
  CHECK(format_trinomial(big) == "-9223372036854775807,5,7;3,4611686018427387904");
  CHECK(parse_trinomial(format_trinomial(big)) == big);

  auto position = [](const char* s) {
    try {
      parse_trinomial(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("2,-3,x;1,2") == 5);
  CHECK(position("2,-3,1;1") == 8);
  CHECK(position("2,-3,1;1,2 junk") == 11);
  CHECK(position("2,0,1;1,2") == 2);
  CHECK(position("2,3,1;2,2") == 8);
  CHECK(position("2,3,1;1,4611686018427387905") == 8);
  CHECK(position("2,3,1;1,2x") == 8);
  try {
    parse_trinomial("2,-3,abc;1,2");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'abc'") != std::string::npos);
  }
}

TEST_CASE("normalize examples") {
  Normalized n = normalize(Trinomial(4, -5, 1, 2, 4));
  CHECK(n.trace.delta == 2);
  CHECK(static_cast<const Trinomial&>(n.f) == Trinomial(4, -5, 1, 1, 2));
  CHECK(n.trace.xflip == 1);

  n = normalize(Trinomial(1, -2, 1, 2, 3));
  CHECK(static_cast<const Trinomial&>(n.f) == Trinomial(1, -2, 1, 2, 3));
  CHECK(n.trace.delta == 1);
  CHECK_FALSE(n.trace.negated);

  n = normalize(Trinomial(-1, 1, 1, 1, 2));
  CHECK(n.trace.xflip == -1);
  CHECK(n.trace.negated);
  CHECK(static_cast<const Trinomial&>(n.f) == Trinomial(-1, -1, 1, 1, 2));

  n = normalize(Trinomial(1, 1, 1, 1, 2));
  CHECK_FALSE(n.f.has_positive_roots);

  // Every pattern with a positive root lands on (+,-,+) or (-,-,+).
  for (int s = 0; s < 8; ++s) {
    const Trinomial f(s & 1 ? -2 : 2, s & 2 ? -3 : 3, s & 4 ? -5 : 5, 2, 7);
    const Normalized r = normalize(f);
    if (!r.f.has_positive_roots) continue;
    CHECK(r.f.c3 > 0);
    CHECK(r.f.c2 < 0);
  }
}

TEST_CASE("discriminant_sign examples") {
  CHECK(discriminant_sign(Trinomial(2, -3, 1, 1, 2)).sign == Sign::positive);
  const SignResult z = discriminant_sign(Trinomial(1, -2, 1, 1, 2));
  CHECK(z.sign == Sign::zero);
  CHECK(z.provenance == Provenance::exact_vanishing);
  CHECK(discriminant_sign(Trinomial(1, -3, 1, 1, 3)).sign == Sign::positive);
}

TEST_CASE("discriminant_sign matches exact big-integer evaluation") {
  long zeros = 0, total = 0;
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      for (int c1 = -5; c1 <= 5; ++c1) {
        for (int c2 = -5; c2 <= 5; ++c2) {
          for (int c3 = -5; c3 <= 5; ++c3) {
            if (!c1 || !c2 || !c3) continue;
            const Trinomial f(c1, c2, c3, m, n);
            const SignResult s = discriminant_sign(f);
            const int e = exact_delta_sign(f);
            REQUIRE(to_int(s.sign) == e);
            if (e == 0) {
              CHECK(s.provenance == Provenance::exact_vanishing);
              ++zeros;
            }
            ++total;
          }
        }
      }
    }
  }
  CHECK(total == 21000);
  CHECK(zeros > 0);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<std::int64_t> deg(2, 64);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t n = deg(rng);
    std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    const std::int64_t g = std::gcd(m, n);
    m /= g;
    n /= g;
    if (n < 2) continue;
    long c[3];
    for (long& x : c) {
      do x = coef(rng); while (x == 0);
    }
    const Trinomial f(c[0], c[1], c[2], m, n);
    REQUIRE(to_int(discriminant_sign(f).sign) == exact_delta_sign(f));
  }
}

TEST_CASE("count_positive_roots examples") {
  RootCount r = count_positive_roots(Trinomial(1, 1, 1, 1, 2));
  CHECK(r.count == 0);
  r = count_positive_roots(Trinomial(2, -3, 1, 1, 2));
  CHECK(r.count == 2);
  CHECK_FALSE(r.degenerate);
  r = count_positive_roots(Trinomial(1, -2, 1, 1, 2));
  CHECK(r.count == 1);
  CHECK(r.degenerate);
  CHECK(count_positive_roots(Trinomial(-1, -1, 1, 1, 2)).count == 1);
  CHECK(count_positive_roots(Trinomial(3, -1, 1, 1, 2)).count == 0);
}

TEST_CASE("is_ill_conditioned examples") {
  CHECK(is_ill_conditioned(Trinomial(9999, -200, 1, 1, 2)));
  CHECK_FALSE(is_ill_conditioned(Trinomial(1, -2, 1, 1, 2)));
  CHECK(is_ill_conditioned(Trinomial(1, 1, 1, 1, 2)));
  CHECK(is_ill_conditioned(Trinomial(2, -3, 1, 1, 2)));  // Q = 1.06
  CHECK_FALSE(is_ill_conditioned(Trinomial(1, -100, 1, 1, 2)));
  // (x+1)^2: degenerate root at -1.
  CHECK_FALSE(is_ill_conditioned(Trinomial(1, 2, 1, 1, 2)));
  // -1 + 2x + x^2 has the monomial exactly 1 but distinct roots -1 +- sqrt 2.
  CHECK(is_ill_conditioned(Trinomial(-1, 2, 1, 1, 2)));
  // (x^2-1)^2 = 1 - 2x^2 + x^4: degenerate roots +-1.
  CHECK_FALSE(is_ill_conditioned(Trinomial(1, -2, 1, 2, 4)));
  CHECK(has_degenerate_real_root(Trinomial(1, -2, 1, 2, 4)));
  // 1 + 2x^3 + x^6 = (x^3+1)^2: degenerate at -1 through the odd delta.
  CHECK(has_degenerate_real_root(Trinomial(1, 2, 1, 3, 6)));
  CHECK_FALSE(has_degenerate_real_root(Trinomial(1, 2, 1, 2, 4)));
}

TEST_CASE("root_norm_bounds examples") {
  NormBounds b = root_norm_bounds(Trinomial(1, -3, 1, 1, 2));
  CHECK(b.lo.contains(mpq_class(1, 6)));
  CHECK(b.hi.contains(mpq_class(6)));
  b = root_norm_bounds(Trinomial(1, -2, 1, 1, 2));
  CHECK(b.lo.contains(mpq_class(1, 4)));
  CHECK(b.hi.contains(mpq_class(4)));
  b = root_norm_bounds(Trinomial(-8, -1, 1, 1, 3));
  CHECK(b.lo.contains(mpq_class(1)));
  CHECK(b.hi.contains(mpq_class(4)));
}

TEST_CASE("series_parameters examples") {
  SeriesParameters p = series_parameters(Trinomial(2, -3, 1, 1, 2));
  CHECK(near(p.c, 2.1213203435596424, 1e-12));
  CHECK(near(p.beta, 1.4142135623730951, 1e-12));
  CHECK(p.r.contains(mpq_class(2)));
  p = series_parameters(Trinomial(1, -2, 1, 1, 2));
  CHECK(p.c.contains(mpq_class(2)));
  CHECK(p.r.contains(mpq_class(2)));
  p = series_parameters(Trinomial(1, -1, 1, 1, 3));
  CHECK(near(p.r, 1.8898815748423097, 1e-12));
  // Accuracy floor 1/(96 (n-1)^2) even at a tiny request.
  p = series_parameters(Trinomial(5, -7, 3, 3, 1000), {2});
  CHECK(*p.c.relative_width() <= 1.0 / (96.0 * 999 * 999));
  CHECK(*p.beta.relative_width() <= 1.0 / (96.0 * 999 * 999));
}
