#include "trinom/sign_eval.hpp"

#include <algorithm>

#include "trinom/solver.hpp"

namespace trinom {

namespace {

std::int64_t bits_of(const mpz_class& x) { return static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

mpz_class power(const mpz_class& b, std::int64_t e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

int exact_numerator_sign(const Trinomial& f, const RationalPoint& r) {
  return sgn(f.c1 * power(r.v, f.a3) + f.c2 * power(r.u, f.a2) * power(r.v, f.a3 - f.a2) + f.c3 * power(r.u, f.a3));
}

// Sign of f(r) by interval evaluation at escalating precision.
std::optional<int> interval_sign(const Trinomial& f, const mpq_class& r, std::int64_t cap) {
  const SparsePoly p = SparsePoly::of(f);
  for (std::int64_t prec = 128; prec <= cap; prec *= 2) {
    if (auto s = p.eval(DyadicInterval::from_rational(r, prec), prec).sign()) return s;
  }
  return std::nullopt;
}

}  // namespace

RationalPoint RationalPoint::of(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  return {q.get_num(), q.get_den()};
}

mpz_class RationalPoint::height() const { return std::max(mpz_class(abs(u)), v); }

bool is_rational_root(const Trinomial& f, const RationalPoint& r) {
  if (r.u == 0) return false;
  const mpz_class au = abs(r.u);
  if (!mpz_divisible_p(f.c1.get_mpz_t(), au.get_mpz_t()) || !mpz_divisible_p(f.c3.get_mpz_t(), r.v.get_mpz_t())) {
    return false;
  }
  if (au == 1 && r.v == 1) {
    const int s2 = (r.u < 0 && f.a2 % 2 == 1) ? -1 : 1;
    const int s3 = (r.u < 0 && f.a3 % 2 == 1) ? -1 : 1;
    return f.c1 + s2 * f.c2 + s3 * f.c3 == 0;
  }
  // u^a2 | c1 and v^(a3-a2) | c3 follow from the identity; with |c_i| < 2^63
  // the leftover factor (c2 + c3 (u/v)^(a3-a2) or its reciprocal twin) is a
  // nonzero integer multiple of a power of u or v, which pins a3 <= 128.
  if (f.a3 > 128) return false;
  return exact_numerator_sign(f, r) == 0;
}

SignResult sign_at(const Trinomial& f_in, const RationalPoint& r_in, const PrecisionRequest& req) {
  if (r_in.u == 0) return {sign_of(sgn(f_in.c1)), Provenance::certified_interval, 0};
  const bool negative = r_in.u < 0;
  const Trinomial f = negative ? f_in.reflected() : f_in;
  const RationalPoint r{abs(r_in.u), r_in.v};
  if (is_rational_root(f, r)) return {Sign::zero, Provenance::exact_vanishing, 0};

  const mpq_class x = r.value();
  SolveReport rep = solve_positive(f, req);
  std::int64_t bits = bits_of(3 * std::max(f.height(), r.height()));
  for (;;) {
    bool clear = true;
    int crossings = 0;
    for (SolvedRoot& root : rep.roots) {
      if (root.bracket.contains(x)) {
        clear = false;
        break;
      }
      if (compare(root.bracket.hi(), x) < 0 && !root.degenerate) ++crossings;
    }
    if (clear) {
      const int s = (crossings % 2 == 0 ? 1 : -1) * sgn(f.c1);
      return {sign_of(s), Provenance::certified_interval, bits};
    }
    if (bits > req.cap_bits) break;
    for (SolvedRoot& root : rep.roots) {
      if (root.bracket.contains(x)) {
        static_cast<CertifiedRoot&>(root) = refine(f, root, mpq_class(1, mpz_class(1) << static_cast<mp_bitcnt_t>(bits)));
      }
    }
    bits *= 2;
  }

  // The point sits within 2^-cap of a root: evaluate directly.
  SignResult out{Sign::zero, Provenance::fallback_exact, bits, true};
  const double cost = static_cast<double>(f.a3) * static_cast<double>(bits_of(r.height()) + 1);
  if (cost <= static_cast<double>(std::int64_t{1} << 24)) {
    out.sign = sign_of(exact_numerator_sign(f, r));
    return out;
  }
  if (auto s = interval_sign(f, x, req.cap_bits * 4)) {
    out.sign = sign_of(*s);
    return out;
  }
  throw UndecidedError("sign of f at the point undecided at the precision cap", DyadicInterval(Dyadic(0)), req.cap_bits);
}

}  // namespace trinom
