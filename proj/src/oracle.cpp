#include "trinom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <mpfr.h>

namespace trinom::oracle {
namespace {

mpz_class ipow(const mpz_class& b, std::int64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

mpz_class Z(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

mpq_class canonical(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  return r;
}

// sign of a2 c2 + a3 c3 x^(a3-a2) at rational x > 0.
int derivative_factor_sign(const Trinomial& f, const mpq_class& x) {
  const std::int64_t k = f.a3 - f.a2;
  return sgn(Z(f.a2) * f.c2 * ipow(x.get_den(), k) + Z(f.a3) * f.c3 * ipow(x.get_num(), k));
}

// Bisect (a, b) with sign(a) = sa != 0, sign(b) = -sa until width <= w.
void bisect(const SignOracle& sign, mpq_class a, int sa, mpq_class b, const mpq_class& w, IsolationResult& out) {
  while (b - a > w) {
    const mpq_class mid = canonical((a + b) / 2);
    const int s = sign(mid);
    if (s == 0) {
      out.exact_roots.push_back(mid);
      out.intervals.emplace_back(mid, mid);
      return;
    }
    if (s == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  out.intervals.emplace_back(a, b);
}

// Bracket [lo, hi] around the positive root w of the derivative factor.
RationalInterval critical_bracket(const Trinomial& f) {
  const int s_near_zero = sgn(f.c2);
  mpq_class lo = 1, hi = 1;
  while (derivative_factor_sign(f, lo) != s_near_zero) lo /= 2;
  while (derivative_factor_sign(f, hi) != -s_near_zero) hi *= 2;
  return {lo, hi};
}

void shrink_critical(const Trinomial& f, RationalInterval& w) {
  const mpq_class mid = canonical((w.first + w.second) / 2);
  const int s = derivative_factor_sign(f, mid);
  if (s == 0) {
    w = {mid, mid};
  } else if (s == sgn(f.c2)) {
    w.first = mid;
  } else {
    w.second = mid;
  }
}

void mpfr_set_q_exact(mpfr_t out, const mpq_class& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

class Mp {
 public:
  explicit Mp(int bits) { mpfr_init2(v_, bits); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void mpfr_eval(const SparsePoly& g, mpfr_t x, mpfr_t out, int bits) {
  Mp term(bits), acc(bits);
  mpfr_set_zero(acc.get(), 1);
  for (const Monomial& t : g.terms()) {
    mpfr_pow_ui(term.get(), x, static_cast<unsigned long>(t.e), MPFR_RNDN);
    mpfr_mul_z(term.get(), term.get(), t.c.get_mpz_t(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  }
  mpfr_set(out, acc.get(), MPFR_RNDN);
}

// One Newton step x <- x - g(x)/g'(x); false if g'(x) = 0.
bool newton(const SparsePoly& g, const SparsePoly& dg, mpfr_t x, int bits) {
  Mp v(bits), dv(bits);
  mpfr_eval(g, x, v.get(), bits);
  mpfr_eval(dg, x, dv.get(), bits);
  if (mpfr_zero_p(dv.get())) return false;
  mpfr_div(v.get(), v.get(), dv.get(), MPFR_RNDN);
  mpfr_sub(x, x, v.get(), MPFR_RNDN);
  return true;
}

}  // namespace

int exact_sign_small(const Trinomial& f, const mpq_class& r_in) {
  const mpq_class r = canonical(r_in);
  const mpz_class& u = r.get_num();
  const mpz_class& v = r.get_den();
  const mpz_class h = std::max(mpz_class(abs(u)), v);
  const double size = std::log2(mpz_class(h + 2).get_d());
  if (static_cast<double>(f.a3) * size > static_cast<double>(1 << 22)) {
    throw ResourceError("exact_sign_small: a3 log2(h(r)+2) exceeds 2^22 bits");
  }
  return sgn(f.c1 * ipow(v, f.a3) + f.c2 * ipow(u, f.a2) * ipow(v, f.a3 - f.a2) + f.c3 * ipow(u, f.a3));
}

int critical_value_sign(const Trinomial& f) {
  if (sgn(f.c2) == sgn(f.c3)) throw DomainError("critical_value_sign needs c2 c3 < 0");
  if (sgn(f.c1) == sgn(f.c2)) return sgn(f.c1);
  const std::int64_t k = f.a3 - f.a2;
  const double bits = static_cast<double>(f.a3) * (std::log2(f.height().get_d()) + 2 * std::log2(f.a3 + 1.0));
  if (bits > static_cast<double>(1 << 24)) {
    const std::int64_t g = std::gcd(f.a2, f.a3);
    const RootCount rc = count_positive_roots(Trinomial(f.c1, f.c2, f.c3, f.a2 / g, f.a3 / g));
    if (rc.degenerate) return 0;
    return rc.count == 2 ? -sgn(f.c3) : sgn(f.c3);
  }
  // f(w) = c1 + c2 w^a2 k / a3 with w^k = -a2 c2 / (a3 c3).
  const mpz_class L = ipow(abs(f.c1) * Z(f.a3), k) * ipow(Z(f.a3) * abs(f.c3), f.a2);
  const mpz_class R = ipow(abs(f.c2) * Z(k), k) * ipow(Z(f.a2) * abs(f.c2), f.a2);
  return sgn(f.c1) * sgn(L - R);
}

IsolationResult bisection_isolate(const Trinomial& f, const SignOracle& sign, const mpq_class& width_in) {
  const mpz_class H = f.height();
  const std::int64_t d = f.a3;
  const mpq_class width =
      width_in > 0 ? width_in : canonical(mpq_class(1, H * 2 * 4 * Z(d - 1) * Z(d - 1)));
  // Positive roots lie in (1/(2H), 2H).
  const mpq_class top(H * 2);
  const int s0 = sgn(f.c1);
  const int s_inf = sgn(f.c3);
  IsolationResult out;

  if (sgn(f.c2) == sgn(f.c3)) {
    if (s0 != s_inf) bisect(sign, 0, s0, top, width, out);
    return out;
  }

  const int sw = critical_value_sign(f);
  RationalInterval w = critical_bracket(f);
  if (sw == 0) {
    while (w.second - w.first > width) shrink_critical(f, w);
    out.intervals.push_back(w);
    out.degenerate = true;
    if (w.first == w.second) out.exact_roots.push_back(w.first);
    return out;
  }
  // Shrink until f has the critical sign at both ends of the bracket.
  while (sign(w.first) != sw || sign(w.second) != sw) shrink_critical(f, w);
  if (s0 != sw) bisect(sign, 0, s0, w.first, width, out);
  if (s_inf != sw) bisect(sign, w.second, sw, top, width, out);
  return out;
}

IsolationResult isolate_real(const Trinomial& f, const mpq_class& width) {
  const Trinomial g = f.reflected();
  const IsolationResult pos = bisection_isolate(f, [&](const mpq_class& x) { return exact_sign_small(f, x); }, width);
  const IsolationResult neg = bisection_isolate(g, [&](const mpq_class& x) { return exact_sign_small(g, x); }, width);
  IsolationResult out;
  for (auto it = neg.intervals.rbegin(); it != neg.intervals.rend(); ++it) {
    out.intervals.emplace_back(-it->second, -it->first);
  }
  for (const mpq_class& r : neg.exact_roots) out.exact_roots.push_back(-r);
  out.intervals.insert(out.intervals.end(), pos.intervals.begin(), pos.intervals.end());
  out.exact_roots.insert(out.exact_roots.end(), pos.exact_roots.begin(), pos.exact_roots.end());
  out.degenerate = pos.degenerate || neg.degenerate;
  return out;
}

int real_root_count(const Trinomial& f) {
  // Coarse width: only the count matters.
  return static_cast<int>(isolate_real(f, mpq_class(1, 1) / 1024).intervals.size());
}

RationalInterval series_root(SeriesKind kind, std::int64_t m, std::int64_t n, const mpq_class& c_in, int bits) {
  const mpq_class c = canonical(c_in);
  const int s = (kind == SeriesKind::low || kind == SeriesKind::hi) ? 1 : -1;
  auto sign = [&](const mpq_class& x) {
    mpq_class xm, xn;
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(m));
    mpz_pow_ui(b.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(m));
    xm = mpq_class(a, b);
    mpz_pow_ui(a.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(b.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(n));
    xn = mpq_class(a, b);
    return sgn(mpq_class(s - c * xm + xn));
  };
  // Critical point of the +1 family: n x^(n-m) = c m.
  auto dsign = [&](const mpq_class& x) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(n - m));
    mpz_pow_ui(b.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(n - m));
    return sgn(mpq_class(Z(n) * mpq_class(a, b) - c * Z(m)));
  };
  mpq_class lo = 0, hi = c + 2;
  if (kind == SeriesKind::low || kind == SeriesKind::hi) {
    mpq_class a = 0, b = c + 2;
    for (int i = 0; i < 80; ++i) {
      const mpq_class mid = canonical((a + b) / 2);
      (dsign(mid) < 0 ? a : b) = mid;
    }
    if (kind == SeriesKind::low) {
      hi = a;
    } else {
      lo = b;
    }
  }
  int slo = lo == 0 ? s : sign(lo);
  const mpq_class scale = hi;
  const mpq_class tol = scale / (mpz_class(1) << bits);
  while (hi - lo > tol) {
    const mpq_class mid = canonical((lo + hi) / 2);
    const int sm = sign(mid);
    if (sm == 0) return {mid, mid};
    (sm == slo ? lo : hi) = mid;
  }
  return {lo, hi};
}

SmaleReport smale_check(const SparsePoly& g, const mpq_class& z0, const RationalInterval& bracket, int iters, int bits) {
  SmaleReport rep;
  const SparsePoly dg = g.derivative();
  Mp zeta(bits), a(bits), b(bits), mid(bits), va(bits), vm(bits);
  mpfr_set_q_exact(a.get(), bracket.first);
  mpfr_set_q_exact(b.get(), bracket.second);
  // Polish zeta: bisection while the bracket changes sign, then Newton.
  mpfr_eval(g, a.get(), va.get(), bits);
  Mp vb(bits);
  mpfr_eval(g, b.get(), vb.get(), bits);
  const bool sign_change = mpfr_sgn(va.get()) * mpfr_sgn(vb.get()) < 0;
  if (sign_change) {
    for (int i = 0; i < 64; ++i) {
      mpfr_add(mid.get(), a.get(), b.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      mpfr_eval(g, mid.get(), vm.get(), bits);
      if (mpfr_zero_p(vm.get())) {
        mpfr_set(a.get(), mid.get(), MPFR_RNDN);
        mpfr_set(b.get(), mid.get(), MPFR_RNDN);
        break;
      }
      if (mpfr_sgn(vm.get()) == mpfr_sgn(va.get())) {
        mpfr_set(a.get(), mid.get(), MPFR_RNDN);
      } else {
        mpfr_set(b.get(), mid.get(), MPFR_RNDN);
      }
    }
  }
  mpfr_add(zeta.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_div_2ui(zeta.get(), zeta.get(), 1, MPFR_RNDN);
  for (int i = 0; i < bits; ++i) {
    Mp prev(bits);
    mpfr_set(prev.get(), zeta.get(), MPFR_RNDN);
    if (!newton(g, dg, zeta.get(), bits)) break;
    if (mpfr_equal_p(prev.get(), zeta.get())) break;
  }
  {
    Mp lo(bits), hi(bits);
    mpfr_set_q_exact(lo.get(), bracket.first);
    mpfr_set_q_exact(hi.get(), bracket.second);
    if (mpfr_less_p(zeta.get(), lo.get()) || mpfr_greater_p(zeta.get(), hi.get()) || mpfr_nan_p(zeta.get())) {
      rep.reason = "polishing left the bracket";
      return rep;
    }
  }

  Mp z(bits), err(bits), e0(bits), floor_(bits), allowed(bits);
  mpfr_set_q_exact(z.get(), z0);
  mpfr_sub(e0.get(), z.get(), zeta.get(), MPFR_RNDN);
  mpfr_abs(e0.get(), e0.get(), MPFR_RNDN);
  // Errors below the working precision are indistinguishable from zero.
  mpfr_abs(floor_.get(), zeta.get(), MPFR_RNDN);
  mpfr_mul_2si(floor_.get(), floor_.get(), -(bits - 64), MPFR_RNDN);
  if (mpfr_lessequal_p(e0.get(), floor_.get())) {
    rep.pass = true;
    rep.iterations = iters;
    return rep;
  }
  for (int i = 1; i <= iters; ++i) {
    if (!newton(g, dg, z.get(), bits)) {
      rep.reason = "derivative vanished at iterate " + std::to_string(i);
      return rep;
    }
    mpfr_sub(err.get(), z.get(), zeta.get(), MPFR_RNDN);
    mpfr_abs(err.get(), err.get(), MPFR_RNDN);
    mpfr_mul_2si(allowed.get(), e0.get(), -((1L << i) - 1), MPFR_RNDN);
    Mp ratio(64);
    mpfr_div(ratio.get(), err.get(), allowed.get(), MPFR_RNDN);
    rep.worst_ratio = std::max(rep.worst_ratio, mpfr_get_d(ratio.get(), MPFR_RNDU));
    rep.iterations = i;
    mpfr_add(allowed.get(), allowed.get(), floor_.get(), MPFR_RNDN);
    if (mpfr_greater_p(err.get(), allowed.get())) {
      rep.reason = "decay violated at iterate " + std::to_string(i);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

FractionCell fraction_experiment(std::int64_t a2, std::int64_t a3, std::int64_t H) {
  FractionCell cell{a2, a3, H, 0, 0, 1.0 / std::log(static_cast<double>(a3 * H)) + 1.0 / static_cast<double>(H)};
  // The monomial in the definition depends on |c_i| only; signs matter only
  // through the degenerate-root clause, which needs the monomial to be exactly 1.
  for (long x = 1; x <= H; ++x) {
    for (long y = 1; y <= H; ++y) {
      for (long z = 1; z <= H; ++z) {
        const Trinomial base(x, y, z, a2, a3);
        const std::int64_t g = std::gcd(a2, a3);
        const bool exactly_one = exact_vanishing(discriminant_form(Trinomial(x, y, z, a2 / g, a3 / g)));
        if (!exactly_one) {
          if (is_ill_conditioned(base)) cell.ill_count += 8;
        } else {
          for (int s = 0; s < 8; ++s) {
            const Trinomial f(s & 1 ? -x : x, s & 2 ? -y : y, s & 4 ? -z : z, a2, a3);
            if (is_ill_conditioned(f)) ++cell.ill_count;
          }
        }
        cell.total += 8;
      }
    }
  }
  return cell;
}

std::string fraction_csv(const std::vector<FractionCell>& cells) {
  std::ostringstream out;
  out << "a2,a3,H,ill_count,total,bound\n";
  out.precision(6);
  out << std::fixed;
  for (const FractionCell& c : cells) {
    out << c.a2 << ',' << c.a3 << ',' << c.H << ',' << c.ill_count << ',' << c.total << ',' << c.bound << '\n';
  }
  return out.str();
}

}  // namespace trinom::oracle
