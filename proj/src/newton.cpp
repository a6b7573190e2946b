#include "trinom/newton.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace trinom {

namespace {

std::int64_t log_width(std::int64_t d) { return std::bit_width(static_cast<std::uint64_t>(std::max<std::int64_t>(d, 1))); }

Dyadic abs_min(const DyadicInterval& x) {
  if (x.contains_zero()) return Dyadic(0);
  return x.positive() ? x.lo() : -x.hi();
}

Dyadic abs_max(const DyadicInterval& x) {
  const Dyadic a = x.lo().sign() < 0 ? -x.lo() : x.lo();
  const Dyadic b = x.hi().sign() < 0 ? -x.hi() : x.hi();
  return std::max(a, b);
}

std::int64_t top_bit(const DyadicInterval& x) {
  const Dyadic m = abs_max(x);
  return m.is_zero() ? 0 : m.magnitude() + 1;
}

// Sign of g at a dyadic point: interval evaluation with doubling precision,
// then exact evaluation for points that may be exact roots.
std::optional<int> point_sign(const SparsePoly& g, const Dyadic& x, std::int64_t& prec, std::int64_t cap) {
  bool tried_exact = false;
  for (;;) {
    if (auto s = g.eval(DyadicInterval(x), prec).sign()) return s;
    if (!tried_exact && prec >= 256) {
      tried_exact = true;
      try {
        return sgn(g.eval_exact(x.to_rational(), std::int64_t{1} << 22));
      } catch (const ResourceError&) {
      }
    }
    if (prec >= cap) return std::nullopt;
    prec = std::min(cap, 2 * prec);
  }
}

// Gate for a given start z: sup|g''| * E <= inf|g'| over [lo - E, hi + E].
bool contraction_holds(const SparsePoly& g, const DyadicInterval& bracket, const mpq_class& z, std::int64_t prec) {
  const Dyadic e1 = from_rational(z - bracket.lo().to_rational(), prec, Round::up);
  const Dyadic e2 = from_rational(bracket.hi().to_rational() - z, prec, Round::up);
  const Dyadic zero(0);
  const Dyadic e = std::max({e1, e2, zero});
  const DyadicInterval region = widen(bracket, e, prec);
  const SparsePoly dg = g.derivative();
  const DyadicInterval d1 = dg.eval(region, prec);
  if (d1.contains_zero()) return false;
  const Dyadic sup2 = abs_max(dg.derivative().eval(region, prec));
  return !(abs_min(d1) < sup2 * e);
}

}  // namespace

AlphaData alpha_data(const Trinomial& f, std::int64_t prec) {
  if (f.c3 <= 0 || f.c2 >= 0) throw DomainError("alpha data needs c3 > 0 > c2");
  AlphaData a;
  a.d = f.a3;
  const mpz_class d(static_cast<long>(f.a3));
  const mpz_class a2(static_cast<long>(f.a2));
  const std::int64_t k = f.a3 - f.a2;
  a.gamma_lo = mpq_class(d - 1, 2);
  a.gamma_hi = mpq_class((d - 1) * (d - 2), 2);
  a.gamma_lo.canonicalize();
  a.gamma_hi.canonicalize();
  a.x1 = rational_power(mpq_class(-a2 * f.c2, d * f.c3), 1, k, prec);
  if (f.a2 == 1) {
    a.x2 = DyadicInterval(Dyadic(0));
  } else {
    a.x2 = rational_power(mpq_class(-a2 * (a2 - 1) * f.c2, d * (d - 1) * f.c3), 1, k, prec);
  }
  return a;
}

SparsePoly iterate_poly(const Trinomial& f, IterateTarget target) {
  const SparsePoly g = SparsePoly::of(f);
  return target == IterateTarget::f ? g : g.derivative();
}

mpq_class newton_step(const SparsePoly& g, const mpq_class& z, const PrecisionRequest& req) {
  const SparsePoly dg = g.derivative();
  const std::int64_t bits = std::max<std::int64_t>(req.bits, 2);
  std::int64_t prec = bits + 2 * log_width(g.degree()) + 32;
  for (;;) {
    const DyadicInterval x = DyadicInterval::from_rational(z, prec);
    const DyadicInterval gx = g.eval(x, prec);
    const DyadicInterval dx = dg.eval(x, prec);
    if (dx.is_point() && dx.lo().is_zero()) throw DomainError("derivative vanishes at the Newton iterate");
    if (!dx.contains_zero()) {
      const DyadicInterval n = sub(x, div(gx, dx, prec), prec);
      const auto rel = n.relative_width();
      if (n.is_point() || (rel && *rel <= std::ldexp(1.0, -bits - 1))) return simplest(n).to_rational();
    }
    if (prec >= req.cap_bits) throw DomainError("derivative vanishes at the Newton iterate");
    prec = std::min(req.cap_bits, 2 * prec);
  }
}

mpq_class newton_step(const Trinomial& f, const mpq_class& z, IterateTarget target, const PrecisionRequest& req) {
  return newton_step(iterate_poly(f, target), z, req);
}

bool certify_start(const Trinomial& f, const mpq_class& z, const DyadicInterval& zeta, const AlphaData& alpha) {
  if (f.c3 <= 0 || f.c2 >= 0 || z <= 0) return false;
  if (zeta.is_point() && compare(zeta.lo(), z) == 0) return true;
  if (alpha.d < 3) {
    return contraction_holds(SparsePoly::of(f), zeta, z, 128 + top_bit(zeta));
  }
  const mpz_class r = 4 * mpz_class(static_cast<long>(alpha.d - 1)) * (alpha.d - 2);
  const Dyadic rd(r);
  // Left of x1: f decreasing on [z, zeta], zeta <= z (1 + 1/r).
  if (compare(zeta.lo(), z) >= 0 && zeta.hi() < alpha.x1.lo() && compare(zeta.hi() * rd, z * (r + 1)) <= 0 &&
      (compare(alpha.x2.hi(), z) < 0 || zeta.hi() < alpha.x2.lo())) {
    return true;
  }
  // Right of x1: f increasing on [zeta, z], zeta >= z (1 - 1/r).
  return compare(zeta.hi(), z) <= 0 && alpha.x1.hi() < zeta.lo() && compare(zeta.lo() * rd, z * (r - 1)) >= 0 &&
         (alpha.x2.hi() < zeta.lo() || compare(alpha.x2.lo(), z) > 0);
}

std::optional<Dyadic> contraction_start(const SparsePoly& g, const DyadicInterval& bracket, const Dyadic& rho,
                                        std::int64_t prec) {
  const Dyadic z = simplest(widen(bracket, rho, prec));
  if (contraction_holds(g, bracket, z.to_rational(), prec)) return z;
  return std::nullopt;
}

DyadicInterval tighten(const SparsePoly& g, DyadicInterval x, const Dyadic& target, std::int64_t cap_bits, int* steps) {
  const SparsePoly dg = g.derivative();
  const std::int64_t base = 64 + 2 * log_width(g.degree());
  std::int64_t prec = base;
  const auto so = point_sign(g, x.lo(), prec, cap_bits);
  const auto sh = point_sign(g, x.hi(), prec, cap_bits);
  if (!so || !sh) throw ResourceError("bracket endpoint sign undecided at " + std::to_string(cap_bits) + " bits");
  if (*so == 0) return DyadicInterval(x.lo());
  if (*sh == 0) return DyadicInterval(x.hi());
  if (*so == *sh) throw CertificationError("no sign change on bracket " + x.to_string());
  const int orient = *so;
  int count = 0;
  const std::int64_t limit = 4 * (std::max<std::int64_t>(0, top_bit(x) - target.magnitude()) + 256);
  while (target < x.width()) {
    if (++count > limit) throw ResourceError("bracket refinement did not converge");
    const Dyadic w = x.width();
    prec = std::max(prec, base + top_bit(x) - w.magnitude());
    const Dyadic m = x.midpoint();
    const auto s = point_sign(g, m, prec, cap_bits);
    if (!s) throw ResourceError("sign at midpoint undecided at " + std::to_string(cap_bits) + " bits");
    if (*s == 0) {
      x = DyadicInterval(m);
      break;
    }
    DyadicInterval half = *s == orient ? DyadicInterval(m, x.hi()) : DyadicInterval(x.lo(), m);
    const DyadicInterval d = dg.eval(x, prec);
    if (!d.contains_zero()) {
      const DyadicInterval mi(m);
      const DyadicInterval n = sub(mi, div(g.eval(mi, prec), d, prec), prec);
      if (auto cut = intersect(half, n)) half = *cut;
    }
    x = half;
  }
  if (steps) *steps = count;
  return x;
}

CertifiedRoot refine(const Trinomial& f, const CertifiedRoot& root, const mpq_class& target_abs) {
  if (target_abs <= 0) throw DomainError("refinement target must be positive");
  const SparsePoly g = iterate_poly(f, root.target);
  const Dyadic target = from_rational(target_abs, 64, Round::down);
  int steps = 0;
  CertifiedRoot out = root;
  out.bracket = tighten(g, root.bracket, target, std::int64_t{1} << 20, &steps);
  if (root.certified) {
    // Quadratic convergence from a certified start: log log of the accuracy
    // gain plus slack for the bisection steps that seed the Newton intervals.
    const std::int64_t gain = std::max<std::int64_t>(1, top_bit(root.bracket) - target.magnitude());
    const std::int64_t expected = log_width(gain) + log_width(f.a3) + log_width(top_bit(root.bracket) + 64) + 8;
    if (steps > 2 * expected + gain / 8) throw CertificationError("Newton refinement stopped contracting");
  }
  const std::int64_t prec = 64 + 2 * log_width(f.a3) + top_bit(out.bracket) + std::max<std::int64_t>(0, -target.magnitude());
  const Dyadic z = out.bracket.is_point() ? out.bracket.lo() : simplest(out.bracket);
  out.value = z.to_rational();
  out.certified = out.bracket.is_point() || contraction_holds(g, out.bracket, out.value, prec);
  return out;
}

CertifiedRoot certify_bracket(const Trinomial& f, const DyadicInterval& bracket, IterateTarget target) {
  const SparsePoly g = iterate_poly(f, target);
  const std::int64_t d = f.a3;
  const mpz_class denom = d >= 3 ? 4 * mpz_class(static_cast<long>(d - 1)) * (d - 2) : mpz_class(8);
  const Dyadic scale = abs_min(bracket);
  if (scale.is_zero()) throw DomainError("root bracket touches zero");
  Dyadic rho = Dyadic(1).shifted(scale.magnitude() - static_cast<std::int64_t>(mpz_sizeinbase(denom.get_mpz_t(), 2)));
  CertifiedRoot out;
  out.target = target;
  out.degenerate = target == IterateTarget::fprime;
  DyadicInterval x = bracket;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    x = tighten(g, x, rho);
    if (x.is_point()) {
      out.bracket = x;
      out.value = x.lo().to_rational();
      out.certified = true;
      return out;
    }
    const std::int64_t prec = 64 + 2 * log_width(d) + top_bit(x) - rho.magnitude();
    if (auto z = contraction_start(g, x, rho, prec)) {
      out.bracket = x;
      out.value = z->to_rational();
      out.certified = true;
      return out;
    }
    rho = rho.shifted(-2);
  }
  throw CertificationError("contraction gate never passed on " + bracket.to_string());
}

}  // namespace trinom
