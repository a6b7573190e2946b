#include "trinom/trinomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace trinom {
namespace {

const mpz_class kCoeffLimit = mpz_class(1) << 63;

int parity_sign(int s, std::int64_t e) { return (e % 2 == 0) ? 1 : s; }

DyadicInterval min_iv(const DyadicInterval& a, const DyadicInterval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

DyadicInterval max_iv(const DyadicInterval& a, const DyadicInterval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Trinomial reduce(const Trinomial& f, std::int64_t delta) {
  return Trinomial(f.c1, f.c2, f.c3, f.a2 / delta, f.a3 / delta);
}

// sign(Delta) given the sign of ln|P| - ln|Q|.
int delta_sign(const Trinomial& f, int magnitude_sign) {
  const int sp = parity_sign(-sgn(f.c2), f.a3);
  const int sq = parity_sign(sgn(f.c1), f.a3 - f.a2) * parity_sign(sgn(f.c3), f.a2);
  if (sp != sq) return sp;
  return sp * magnitude_sign;
}

bool two_change_pattern(const Trinomial& f) {
  return sgn(f.c1) == sgn(f.c3) && sgn(f.c2) != sgn(f.c1);
}

}  // namespace

Trinomial::Trinomial(mpz_class c1_, mpz_class c2_, mpz_class c3_, std::int64_t a2_, std::int64_t a3_)
    : c1(std::move(c1_)), c2(std::move(c2_)), c3(std::move(c3_)), a2(a2_), a3(a3_) {
  for (const mpz_class* c : {&c1, &c2, &c3}) {
    if (*c == 0) throw DomainError("trinomial coefficients must be nonzero");
    if (abs(*c) >= kCoeffLimit) throw DomainError("coefficient " + c->get_str() + " exceeds 2^63 in magnitude");
  }
  if (a2 < 1 || a3 <= a2) throw DomainError("exponents must satisfy 1 <= a2 < a3");
  if (a3 > kMaxExponent) throw DomainError("exponent " + std::to_string(a3) + " exceeds 2^62");
}

mpz_class Trinomial::height() const { return std::max({abs(c1), abs(c2), abs(c3)}); }

Trinomial Trinomial::reflected() const {
  return {c1, a2 % 2 ? mpz_class(-c2) : c2, a3 % 2 ? mpz_class(-c3) : c3, a2, a3};
}

Trinomial Trinomial::reciprocal() const { return {c3, c2, c1, a3 - a2, a3}; }

Trinomial Trinomial::negated() const { return {-c1, -c2, -c3, a2, a3}; }

Normalized normalize(const Trinomial& f) {
  Normalized out;
  out.trace.delta = std::gcd(f.a2, f.a3);
  Trinomial g = reduce(f, out.trace.delta);
  const auto [s1, s2, s3] = g.pattern();
  if (s1 == s2 && s2 == s3) {
    out.f = {g};
    out.f.has_positive_roots = false;
    return out;
  }
  if (s1 == s3) {
    // (+,-,+) or (-,+,-)
    if (s3 < 0) {
      g = g.negated();
      out.trace.negated = true;
    }
  } else {
    if (s1 != s2) {
      // c1 alone: (+,-,-) or (-,+,+); move the lone sign to the top.
      g = g.reciprocal();
      out.trace.xflip = -1;
    }
    if (sgn(g.c3) < 0) {
      g = g.negated();
      out.trace.negated = true;
    }
  }
  out.f = {g};
  return out;
}

Trinomial parse_trinomial(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto token_at = [&](std::size_t p) {
    std::size_t e = p;
    while (e < text.size() && text[e] != ',' && text[e] != ';' && !std::isspace(static_cast<unsigned char>(text[e]))) ++e;
    return e == p ? (p < text.size() ? std::string(1, text[p]) : std::string("end of input"))
                  : std::string(text.substr(p, e - p));
  };
  auto integer = [&](const char* what) {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits || (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))) {
      throw ParseError(std::string("expected integer ") + what + ", found '" + token_at(start) + "'", start);
    }
    std::string s(text.substr(start, pos - start));
    if (s[0] == '+') s.erase(0, 1);
    return std::pair<mpz_class, std::size_t>{mpz_class(s), start};
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "', found '" + token_at(pos) + "'", pos);
    }
    ++pos;
  };
  auto exponent = [&](const char* what) {
    auto [v, at] = integer(what);
    if (v < 1 || v > mpz_class(static_cast<unsigned long>(kMaxExponent))) {
      throw ParseError(std::string("exponent ") + what + " = " + v.get_str() + " outside [1, 2^62]", at);
    }
    return std::pair<std::int64_t, std::size_t>{static_cast<std::int64_t>(v.get_si()), at};
  };

  auto [c1, p1] = integer("c1");
  expect(',');
  auto [c2, p2] = integer("c2");
  expect(',');
  auto [c3, p3] = integer("c3");
  expect(';');
  auto [a2, q2] = exponent("a2");
  expect(',');
  auto [a3, q3] = exponent("a3");
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected trailing '" + token_at(pos) + "'", pos);

  const std::pair<const mpz_class*, std::size_t> coeffs[] = {{&c1, p1}, {&c2, p2}, {&c3, p3}};
  for (const auto& [c, at] : coeffs) {
    if (*c == 0) throw ParseError("coefficient must be nonzero, found '0'", at);
    if (abs(*c) >= kCoeffLimit) throw ParseError("coefficient '" + c->get_str() + "' exceeds 2^63", at);
  }
  if (a3 <= a2) throw ParseError("exponents must satisfy a2 < a3", q3);
  (void)q2;
  return {c1, c2, c3, a2, a3};
}

std::string format_trinomial(const Trinomial& f) {
  return f.c1.get_str() + "," + f.c2.get_str() + "," + f.c3.get_str() + ";" + std::to_string(f.a2) + "," +
         std::to_string(f.a3);
}

LogLinearForm discriminant_form(const Trinomial& f) {
  const std::int64_t m = f.a2, n = f.a3;
  LogLinearForm form;
  form.add(n, abs(f.c2))
      .add(m, m)
      .add(n - m, n - m)
      .add(-n, n)
      .add(-(n - m), abs(f.c1))
      .add(-m, abs(f.c3));
  return form;
}

SignResult discriminant_sign(const Trinomial& f, const PrecisionRequest& req) {
  const int sp = parity_sign(-sgn(f.c2), f.a3);
  const int sq = parity_sign(sgn(f.c1), f.a3 - f.a2) * parity_sign(sgn(f.c3), f.a2);
  if (sp != sq) return {sign_of(sp), Provenance::certified_interval, 0};
  SignResult s = sign_linear_form(discriminant_form(f), req);
  s.sign = sign_of(delta_sign(f, to_int(s.sign)));
  return s;
}

RootCount count_positive_roots(const Trinomial& f, const PrecisionRequest& req) {
  const auto [s1, s2, s3] = f.pattern();
  if (s1 == s2 && s2 == s3) return {0, false};
  if (!two_change_pattern(f)) return {1, false};
  // Delta is homogeneous of degree a3, so Delta(-f) = (-1)^a3 Delta(f); the
  // count is read off the (+,-,+) representative.
  const int d = to_int(discriminant_sign(f, req).sign) * parity_sign(s3, f.a3);
  if (d == 0) return {1, true};
  return {d > 0 ? 2 : 0, false};
}

bool has_degenerate_real_root(const Trinomial& f, const PrecisionRequest& req) {
  const std::int64_t delta = std::gcd(f.a2, f.a3);
  const Trinomial g = reduce(f, delta);
  const Trinomial h = g.reflected();
  const bool pos = two_change_pattern(g);
  const bool neg = delta % 2 == 1 && two_change_pattern(h);
  if (!pos && !neg) return false;
  // |P| and |Q| are the same for g and g(-y); only the sign bookkeeping differs.
  const SignResult mag = sign_linear_form(discriminant_form(g), req);
  if (mag.sign != Sign::zero) return false;
  return (pos && delta_sign(g, 0) == 0) || (neg && delta_sign(h, 0) == 0);
}

bool is_ill_conditioned(const Trinomial& f, const PrecisionRequest& req) {
  const std::int64_t delta = std::gcd(f.a2, f.a3);
  const Trinomial g = reduce(f, delta);
  const LogLinearForm form = discriminant_form(g);
  const mpz_class dh = f.height() * mpz_class(static_cast<unsigned long>(f.a3));
  const mpz_class n(static_cast<unsigned long>(g.a3));
  bool checked_one = false;
  const std::int64_t cap = std::max<std::int64_t>(req.cap_bits, 64);
  for (std::int64_t p = std::clamp<std::int64_t>(req.bits, 32, cap);; p = std::min(2 * p, cap)) {
    // Q = exp(form / n) is the left-hand monomial; |Q - 1| vs 1 / ln(dH).
    const DyadicInterval q = exp(div_int(form.evaluate(p), n, p + 8), p + 8);
    const DyadicInterval gap = abs(sub(q, DyadicInterval(Dyadic(1)), p + 8));
    const DyadicInterval threshold = div(DyadicInterval(Dyadic(1)), log_approx(dh, {p, cap}), p + 8);
    if (gap.hi() < threshold.lo()) return !has_degenerate_real_root(f, req);
    if (threshold.hi() < gap.lo()) return false;
    if (!checked_one) {
      if (exact_vanishing(form)) return !has_degenerate_real_root(f, req);
      checked_one = true;
    }
    if (p >= cap) throw UndecidedError("conditioning undecided at the precision cap", gap, p);
  }
}

DyadicInterval rational_power(const mpq_class& x, std::int64_t p, std::int64_t q, std::int64_t bits) {
  mpq_class a = x;
  a.canonicalize();
  a = abs(a);
  LogLinearForm form;
  form.add(p, a);
  if (form.size() == 0 || a == 1) return DyadicInterval(Dyadic(1));
  return exp_form(form, q, bits);
}

NormBounds root_norm_bounds(const Trinomial& f, std::int64_t prec) {
  const mpq_class c12(f.c1, f.c2), c13(f.c1, f.c3), c23(f.c2, f.c3);
  const DyadicInterval r13 = rational_power(c13, 1, f.a3, prec);
  const DyadicInterval lo = min_iv(rational_power(c12, 1, f.a2, prec), r13);
  const DyadicInterval hi = max_iv(rational_power(c23, 1, f.a3 - f.a2, prec), r13);
  return {shifted(lo, -1), shifted(hi, 1)};
}

SeriesParameters series_parameters(const Trinomial& f, const PrecisionRequest& req) {
  const std::int64_t m = f.a2, n = f.a3;
  // 96 (n-1)^2 < 2^(7 + 2 log2 n)
  const std::int64_t bits = std::max<std::int64_t>(req.bits, 9 + 2 * std::bit_width(static_cast<std::uint64_t>(n)));
  SeriesParameters out;
  LogLinearForm c;
  c.add(n, abs(f.c2)).add(-(n - m), abs(f.c1)).add(-m, abs(f.c3));
  out.c = exp_form(c, n, bits);
  LogLinearForm beta;
  beta.add(1, abs(f.c1)).add(-1, abs(f.c3));
  out.beta = exp_form(beta, n, bits);
  LogLinearForm r;
  r.add(n, n).add(-m, m).add(-(n - m), n - m);
  out.r = exp_form(r, n, bits);
  return out;
}

}  // namespace trinom
