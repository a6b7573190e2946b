#include "trinom/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace trinom {

namespace {

constexpr std::int64_t kExponentLimit = std::int64_t{1} << 62;

std::int64_t bitlen(const mpz_class& z) {
  return static_cast<std::int64_t>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kExponentLimit || r < -kExponentLimit)
    throw ResourceError("dyadic exponent range exceeded");
  return r;
}

mpz_class shl(const mpz_class& z, std::int64_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

mpz_class div_floor(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class div_ceil(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// atanh(a/b) * 2^prec bracketed by integers, for 0 < a/b <= 1/3.
std::pair<mpz_class, mpz_class> atanh_fixed(const mpz_class& a, const mpz_class& b,
                                            std::int64_t prec) {
  const mpz_class scaled = shl(a, prec);
  mpz_class plo = div_floor(scaled, b);
  mpz_class phi = div_ceil(scaled, b);
  const mpz_class a2 = a * a;
  const mpz_class b2 = b * b;
  mpz_class slo = 0;
  mpz_class shi = 0;
  for (long i = 0;; ++i) {
    const mpz_class d = 2 * i + 1;
    slo += div_floor(plo, d);
    shi += div_ceil(phi, d);
    plo = div_floor(plo * a2, b2);
    phi = div_ceil(phi * a2, b2);
    if (phi <= 1) {
      // Remaining terms sum to at most phi / (1 - t^2) <= 9/8 * phi.
      shi += 2;
      break;
    }
  }
  return {slo, shi};
}

// atanh(t) for rational 0 < t <= 1/3, as a pair of integers scaled by 2^prec.
std::pair<mpz_class, mpz_class> atanh_scaled(const mpz_class& a, const mpz_class& b,
                                             std::int64_t prec) {
  if (bitlen(a) + bitlen(b) <= 2 * prec + 64) return atanh_fixed(a, b, prec);
  // Large operands: bracket t by two prec-bit fractions and use monotonicity.
  const mpz_class one = shl(mpz_class(1), prec);
  const mpz_class tlo = div_floor(shl(a, prec), b);
  const mpz_class thi = div_ceil(shl(a, prec), b);
  auto lo = tlo == 0 ? std::pair<mpz_class, mpz_class>{0, 0} : atanh_fixed(tlo, one, prec);
  auto hi = atanh_fixed(thi, one, prec);
  return {lo.first, hi.second};
}

DyadicInterval ln_rational(const mpq_class& q, std::int64_t prec) {
  if (q == 1) return DyadicInterval(Dyadic(0));
  std::int64_t k = floor_log2(q);
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (k > 0) den = shl(den, k);
  if (k < 0) num = shl(num, -k);
  // m = num/den in [1, 2); recentre to [1/sqrt2, sqrt2) so |t| <= 0.1716.
  if (num * num > 2 * den * den) {
    den *= 2;
    ++k;
  }
  const mpz_class tn = num - den;
  const mpz_class td = num + den;
  const std::int64_t klen = k == 0 ? 0 : bitlen(mpz_class(static_cast<long>(k)));
  std::int64_t guard = 8 + klen;
  if (tn != 0) {
    const mpq_class t(abs(tn), td);
    guard += std::max<std::int64_t>(0, -floor_log2(t));
  }
  const std::int64_t p = prec + guard;
  mpz_class lo = 0;
  mpz_class hi = 0;
  if (tn != 0) {
    auto [slo, shi] = atanh_scaled(abs(tn), td, p);
    if (tn > 0) {
      lo = 2 * slo;
      hi = 2 * shi;
    } else {
      lo = -2 * shi;
      hi = -2 * slo;
    }
  }
  if (k != 0) {
    auto [llo, lhi] = atanh_fixed(1, 3, p);
    const mpz_class kk = static_cast<long>(k);
    if (k > 0) {
      lo += 2 * kk * llo;
      hi += 2 * kk * lhi;
    } else {
      lo += 2 * kk * lhi;
      hi += 2 * kk * llo;
    }
  }
  DyadicInterval r(Dyadic(lo, -p), Dyadic(hi, -p));
  return DyadicInterval(round(r.lo(), prec + 8, Round::down), round(r.hi(), prec + 8, Round::up));
}

DyadicInterval exp_point(const Dyadic& x, std::int64_t prec) {
  if (x.is_zero()) return DyadicInterval(Dyadic(1));
  const double xd = x.to_double();
  if (!(std::fabs(xd) < 0x1p61)) throw ResourceError("exp: argument exceeds exponent range");
  const auto k = static_cast<long>(std::llround(xd / 0.69314718055994530942));
  const std::int64_t klen = k == 0 ? 0 : bitlen(mpz_class(k));
  constexpr std::int64_t kHalvings = 10;
  const std::int64_t p = prec + 16 + kHalvings + klen;

  DyadicInterval r(x);
  if (k != 0) r = sub(r, mul_int(ln2(p + klen), mpz_class(k), p + klen), p);
  r = shifted(r, -kHalvings);

  DyadicInterval sum(Dyadic(1));
  DyadicInterval term(Dyadic(1));
  for (long i = 1;; ++i) {
    term = div_int(mul(term, r, p), mpz_class(i), p);
    sum = add(sum, term, p);
    const DyadicInterval mag = abs(term);
    if (mag.hi().is_zero() || mag.hi().magnitude() < -p - 2) {
      // |r| < 2^-9, so the remaining tail is below |term|.
      sum = widen(sum, mag.hi(), p);
      break;
    }
  }
  for (int i = 0; i < kHalvings; ++i) sum = mul(sum, sum, p);
  return shifted(sum, k);
}

}  // namespace

// --- Dyadic ---------------------------------------------------------------

Dyadic::Dyadic(long value) : mant_(value) { canonicalize(); }

Dyadic::Dyadic(const mpz_class& mantissa, std::int64_t exponent) : mant_(mantissa), exp_(exponent) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  const auto tz = static_cast<std::int64_t>(mpz_scan1(mant_.get_mpz_t(), 0));
  if (tz > 0) {
    mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
    exp_ = checked_add(exp_, tz);
  }
}

std::int64_t Dyadic::bit_length() const { return is_zero() ? 0 : bitlen(mant_); }

std::int64_t Dyadic::magnitude() const { return bit_length() + exp_ - 1; }

mpq_class Dyadic::to_rational() const {
  if (exp_ > (1 << 26) || exp_ < -(1 << 26))
    throw ResourceError("dyadic too large for exact rational conversion");
  if (exp_ >= 0) return mpq_class(shl(mant_, exp_));
  mpq_class q(mant_, shl(mpz_class(1), -exp_));
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long e = 0;
  const double d = mpz_get_d_2exp(&e, mant_.get_mpz_t());
  const std::int64_t total = exp_ + e;
  if (total > 4096) return d > 0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
  if (total < -4096) return 0.0;
  return std::ldexp(d, static_cast<int>(total));
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  if (exp_ >= -64 && exp_ <= 64 && bit_length() <= 128) {
    os << to_rational().get_str();
  } else {
    os.precision(17);
    os << to_double() << " [" << mant_.get_str() << "*2^" << exp_ << "]";
  }
  return os.str();
}

Dyadic Dyadic::shifted(std::int64_t k) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  r.exp_ = checked_add(exp_, k);
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.mant_ = -r.mant_;
  return r;
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  return Dyadic(a.mant_ * b.mant_, checked_add(a.exp_, b.exp_));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  const std::int64_t ma = a.magnitude();
  const std::int64_t mb = b.magnitude();
  if (ma != mb) return sa > 0 ? ma <=> mb : mb <=> ma;
  const std::int64_t e = std::min(a.exp_, b.exp_);
  const int c = cmp(shl(a.mant_, a.exp_ - e), shl(b.mant_, b.exp_ - e));
  return c <=> 0;
}

Dyadic round(const Dyadic& x, std::int64_t prec, Round dir) {
  const std::int64_t bl = x.bit_length();
  if (bl <= prec) return x;
  const std::int64_t s = bl - prec;
  mpz_class m;
  if (dir == Round::down)
    mpz_fdiv_q_2exp(m.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  else
    mpz_cdiv_q_2exp(m.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  return Dyadic(m, checked_add(x.exponent(), s));
}

Dyadic add(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir) {
  if (a.is_zero()) return round(b, prec, dir);
  if (b.is_zero()) return round(a, prec, dir);
  const bool a_big = a.magnitude() >= b.magnitude();
  const Dyadic& big = a_big ? a : b;
  const Dyadic& small = a_big ? b : a;
  const std::int64_t gap_floor = big.magnitude() - prec - 3;
  if (small.magnitude() < gap_floor) {
    // `small` is below the rounding granularity: replace it by a sticky bit
    // of the same sign, or drop it when it pulls against the rounding.
    const bool toward = (dir == Round::up) == (small.sign() > 0);
    if (!toward) return round(big, prec, dir);
    const Dyadic eps = Dyadic(mpz_class(small.sign()), gap_floor);
    const std::int64_t e = std::min(big.exponent(), eps.exponent());
    return round(Dyadic(shl(big.mantissa(), big.exponent() - e) + shl(eps.mantissa(), eps.exponent() - e), e),
                 prec, dir);
  }
  const std::int64_t e = std::min(a.exponent(), b.exponent());
  return round(Dyadic(shl(a.mantissa(), a.exponent() - e) + shl(b.mantissa(), b.exponent() - e), e), prec,
               dir);
}

Dyadic sub(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir) { return add(a, -b, prec, dir); }

Dyadic mul(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir) { return round(a * b, prec, dir); }

Dyadic divide(const Dyadic& a, const Dyadic& b, std::int64_t prec, Round dir) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return Dyadic();
  const std::int64_t s = prec + b.bit_length() - a.bit_length() + 2;
  mpz_class num = a.mantissa();
  mpz_class den = b.mantissa();
  if (s >= 0)
    num = shl(num, s);
  else
    den = shl(den, -s);
  const mpz_class q = dir == Round::down ? div_floor(num, den) : div_ceil(num, den);
  return round(Dyadic(q, checked_add(checked_add(a.exponent(), -b.exponent()), -s)), prec, dir);
}

Dyadic from_rational(const mpq_class& q, std::int64_t prec, Round dir) {
  return divide(Dyadic(q.get_num()), Dyadic(q.get_den()), prec, dir);
}

int compare(const Dyadic& a, const mpq_class& q) {
  const int sa = a.sign();
  const int sq = sgn(q);
  if (sa != sq) return sa < sq ? -1 : 1;
  if (sa == 0) return 0;
  const std::int64_t ma = a.magnitude();
  const std::int64_t mq = floor_log2(abs(q));
  if (ma != mq) return (ma < mq) == (sa > 0) ? -1 : 1;
  mpz_class lhs = a.mantissa() * q.get_den();
  mpz_class rhs = q.get_num();
  if (a.exponent() >= 0)
    lhs = shl(lhs, a.exponent());
  else
    rhs = shl(rhs, -a.exponent());
  const int c = cmp(lhs, rhs);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::int64_t floor_log2(const mpq_class& q) {
  if (q <= 0) throw DomainError("floor_log2 of nonpositive value");
  const std::int64_t k = bitlen(q.get_num()) - bitlen(q.get_den());
  if (k >= 0) return q.get_num() >= shl(q.get_den(), k) ? k : k - 1;
  return shl(q.get_num(), -k) >= q.get_den() ? k : k - 1;
}

// --- DyadicInterval --------------------------------------------------------

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi");
}

DyadicInterval DyadicInterval::from_rational(const mpq_class& q, std::int64_t prec) {
  return {trinom::from_rational(q, prec, Round::down), trinom::from_rational(q, prec, Round::up)};
}

bool DyadicInterval::contains(const mpq_class& q) const { return compare(lo_, q) <= 0 && compare(hi_, q) >= 0; }

std::optional<int> DyadicInterval::sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (lo_.is_zero() && hi_.is_zero()) return 0;
  return std::nullopt;
}

Dyadic DyadicInterval::width(std::int64_t prec) const { return trinom::sub(hi_, lo_, prec, Round::up); }

Dyadic DyadicInterval::midpoint() const {
  if (is_point()) return lo_;
  const std::int64_t p = std::max(lo_.bit_length(), hi_.bit_length()) + 64;
  Dyadic m = trinom::add(lo_, hi_, p, Round::down).shifted(-1);
  if (m < lo_) return lo_;
  if (hi_ < m) return hi_;
  return m;
}

std::optional<double> DyadicInterval::relative_width() const {
  if (contains_zero()) return std::nullopt;
  const DyadicInterval a = trinom::abs(*this);
  return divide(width(), a.lo(), 64, Round::up).to_double();
}

std::string DyadicInterval::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

DyadicInterval operator-(const DyadicInterval& x) { return {-x.hi(), -x.lo()}; }

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  return {add(a.lo(), b.lo(), prec, Round::down), add(a.hi(), b.hi(), prec, Round::up)};
}

DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  return {sub(a.lo(), b.hi(), prec, Round::down), sub(a.hi(), b.lo(), prec, Round::up)};
}

DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  if (a.lo().sign() >= 0 && b.lo().sign() >= 0)
    return {mul(a.lo(), b.lo(), prec, Round::down), mul(a.hi(), b.hi(), prec, Round::up)};
  const Dyadic c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  const auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return {round(*mn, prec, Round::down), round(*mx, prec, Round::up)};
}

DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, std::int64_t prec) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const Dyadic* xs[2] = {&a.lo(), &a.hi()};
  const Dyadic* ys[2] = {&b.lo(), &b.hi()};
  std::optional<Dyadic> lo;
  std::optional<Dyadic> hi;
  for (const Dyadic* x : xs) {
    for (const Dyadic* y : ys) {
      Dyadic l = divide(*x, *y, prec, Round::down);
      Dyadic h = divide(*x, *y, prec, Round::up);
      if (!lo || l < *lo) lo = std::move(l);
      if (!hi || *hi < h) hi = std::move(h);
    }
  }
  return {*lo, *hi};
}

DyadicInterval mul_int(const DyadicInterval& a, const mpz_class& k, std::int64_t prec) {
  const Dyadic kk(k);
  if (k >= 0) return {mul(a.lo(), kk, prec, Round::down), mul(a.hi(), kk, prec, Round::up)};
  return {mul(a.hi(), kk, prec, Round::down), mul(a.lo(), kk, prec, Round::up)};
}

DyadicInterval div_int(const DyadicInterval& a, const mpz_class& k, std::int64_t prec) {
  const Dyadic kk(k);
  if (k > 0) return {divide(a.lo(), kk, prec, Round::down), divide(a.hi(), kk, prec, Round::up)};
  if (k < 0) return {divide(a.hi(), kk, prec, Round::down), divide(a.lo(), kk, prec, Round::up)};
  throw DomainError("division by zero");
}

DyadicInterval shifted(const DyadicInterval& a, std::int64_t k) { return {a.lo().shifted(k), a.hi().shifted(k)}; }

DyadicInterval abs(const DyadicInterval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  return {Dyadic(), std::max(-a.lo(), a.hi())};
}

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

std::optional<DyadicInterval> intersect(const DyadicInterval& a, const DyadicInterval& b) {
  const Dyadic& lo = std::max(a.lo(), b.lo());
  const Dyadic& hi = std::min(a.hi(), b.hi());
  if (hi < lo) return std::nullopt;
  return DyadicInterval(lo, hi);
}

DyadicInterval widen(const DyadicInterval& a, const Dyadic& radius, std::int64_t prec) {
  return {sub(a.lo(), radius, prec, Round::down), add(a.hi(), radius, prec, Round::up)};
}

namespace {

// Smallest multiple of 2^k that is >= x.
Dyadic ceil_multiple(const Dyadic& x, std::int64_t k) {
  if (x.exponent() >= k) return x;
  mpz_class q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(k - x.exponent()));
  return Dyadic(q, k);
}

Dyadic simplest_positive(const DyadicInterval& a) {
  // A multiple of 2^(k+1) is a multiple of 2^k, so feasibility is monotone in k.
  std::int64_t good = a.is_point() ? a.lo().exponent() : a.width().magnitude();
  std::int64_t bad = a.hi().magnitude() + 1;
  if (good >= bad) return a.lo();
  while (bad - good > 1) {
    const std::int64_t mid = good + (bad - good) / 2;
    if (ceil_multiple(a.lo(), mid) <= a.hi()) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return ceil_multiple(a.lo(), good);
}

}  // namespace

Dyadic simplest(const DyadicInterval& a) {
  if (a.contains_zero()) return Dyadic(0);
  if (a.positive()) return simplest_positive(a);
  return -simplest_positive(-a);
}

namespace {

Dyadic pow_nonneg(const Dyadic& base, std::uint64_t e, std::int64_t prec, Round dir) {
  Dyadic result(1);
  Dyadic b = base;
  while (e != 0) {
    if (e & 1U) result = mul(result, b, prec, dir);
    e >>= 1U;
    if (e != 0) b = mul(b, b, prec, dir);
  }
  return result;
}

}  // namespace

DyadicInterval pow(const DyadicInterval& x, std::uint64_t e, std::int64_t prec) {
  if (e == 0) return DyadicInterval(Dyadic(1));
  if (x.lo().sign() >= 0)
    return {pow_nonneg(x.lo(), e, prec, Round::down), pow_nonneg(x.hi(), e, prec, Round::up)};
  const bool odd = (e & 1U) != 0;
  if (x.hi().sign() <= 0) {
    const DyadicInterval p = pow(-x, e, prec);
    return odd ? -p : p;
  }
  if (odd) return {-pow_nonneg(-x.lo(), e, prec, Round::up), pow_nonneg(x.hi(), e, prec, Round::up)};
  return {Dyadic(), pow_nonneg(std::max(-x.lo(), x.hi()), e, prec, Round::up)};
}

DyadicInterval ln2(std::int64_t prec) {
  const std::int64_t p = prec + 4;
  auto [lo, hi] = atanh_fixed(1, 3, p);
  return {round(Dyadic(2 * lo, -p), prec, Round::down), round(Dyadic(2 * hi, -p), prec, Round::up)};
}

DyadicInterval log(const DyadicInterval& x, std::int64_t prec) {
  if (x.lo().sign() <= 0) throw DomainError("log of an interval that is not strictly positive");
  const auto far = [](const Dyadic& d) { return d.magnitude() > 1024 || d.magnitude() < -1024; };
  if (far(x.lo()) || far(x.hi())) {
    // Split off the binary exponent first so the rational core stays small.
    const auto piece = [&](const Dyadic& d, bool low) {
      const std::int64_t e = d.exponent();
      const Dyadic m(d.mantissa());
      const DyadicInterval lm = ln_rational(mpq_class(m.mantissa()), prec);
      const std::int64_t p = prec + 72;
      const DyadicInterval t = add(lm, mul_int(ln2(p), mpz_class(static_cast<long>(e)), p), prec + 8);
      return low ? t.lo() : t.hi();
    };
    return {piece(x.lo(), true), piece(x.hi(), false)};
  }
  const DyadicInterval lo = ln_rational(x.lo().to_rational(), prec);
  if (x.is_point()) return lo;
  const DyadicInterval hi = ln_rational(x.hi().to_rational(), prec);
  return {lo.lo(), hi.hi()};
}

DyadicInterval exp(const DyadicInterval& x, std::int64_t prec) {
  if (x.is_point()) return exp_point(x.lo(), prec);
  return {exp_point(x.lo(), prec).lo(), exp_point(x.hi(), prec).hi()};
}

DyadicInterval log_approx(const mpq_class& x_in, const PrecisionRequest& req) {
  mpq_class x = x_in;
  x.canonicalize();
  if (x <= 0) throw DomainError("log_approx: argument must be positive, got " + x.get_str());
  if (x == 1) return DyadicInterval(Dyadic(0));
  for (std::int64_t p = req.bits + 16;; p *= 2) {
    DyadicInterval l = ln_rational(x, p);
    const DyadicInterval a = abs(l);
    // width * 2^(bits-1) <= min |l|
    if (!a.lo().is_zero() && !(a.lo() < l.width().shifted(req.bits - 1))) return l;
    if (p > 4 * req.cap_bits) throw ResourceError("log_approx: precision cap exceeded for " + x.get_str());
  }
}

std::int64_t log_magnitude(const mpq_class& x) {
  for (std::int64_t bits = 64;; bits *= 2) {
    const DyadicInterval a = abs(log_approx(x, {bits, std::int64_t{1} << 20}));
    if (a.hi() < Dyadic(1)) return 0;
    if (!(a.lo() < Dyadic(1)) && a.lo().magnitude() == a.hi().magnitude()) return a.lo().magnitude();
    if (bits > (1 << 16)) return std::max<std::int64_t>(0, a.lo().magnitude());
  }
}

DyadicInterval exp_approx(const DyadicInterval& t, const PrecisionRequest& req) {
  return exp(t, req.bits + 16);
}

DyadicInterval pow_int(const mpq_class& x, std::uint64_t e, const PrecisionRequest& req) {
  const std::int64_t p = req.bits + 16 + 64;
  return pow(DyadicInterval::from_rational(x, p), e, p);
}

}  // namespace trinom
