#include "trinom/logform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "trinom/factor.hpp"

namespace trinom {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::certified_interval: return "certified-interval";
    case Provenance::exact_vanishing: return "exact-vanishing";
    case Provenance::fallback_exact: return "fallback-exact";
  }
  return "unknown";
}

LogLinearForm::LogLinearForm(std::initializer_list<LogTerm> terms) {
  for (const LogTerm& t : terms) add(t.b, t.alpha);
}

LogLinearForm& LogLinearForm::add(std::int64_t b, const mpq_class& alpha) {
  if (sgn(alpha) <= 0) throw DomainError("log form: alpha must be positive, got " + alpha.get_str());
  if (b == 0) return *this;
  terms_.push_back({b, alpha});
  terms_.back().alpha.canonicalize();
  return *this;
}

std::int64_t LogLinearForm::max_coefficient() const {
  std::int64_t B = 1;
  for (const LogTerm& t : terms_) B = std::max(B, t.b < 0 ? -t.b : t.b);
  return B;
}

DyadicInterval LogLinearForm::evaluate(std::int64_t prec) const {
  DyadicInterval sum(Dyadic(0));
  const std::int64_t guard = 4 + static_cast<std::int64_t>(std::bit_width(terms_.size()));
  for (const LogTerm& t : terms_) {
    if (t.alpha == 1) continue;
    const std::int64_t p = prec + std::bit_width(static_cast<std::uint64_t>(t.b < 0 ? -t.b : t.b)) + guard;
    const DyadicInterval l = log_approx(t.alpha, {p, p + 256});
    sum = trinom::add(sum, mul_int(l, mpz_class(static_cast<long>(t.b)), p), p);
  }
  return sum;
}

namespace {

bool rel_ok(const DyadicInterval& iv, std::int64_t bits) {
  const DyadicInterval a = abs(iv);
  return !a.lo().is_zero() && !(a.lo() < iv.width().shifted(bits - 1));
}

}  // namespace

DyadicInterval exp_form(const LogLinearForm& form, std::int64_t divisor, std::int64_t bits) {
  for (std::int64_t p = bits + 12;; p *= 2) {
    const DyadicInterval l = div_int(form.evaluate(p), mpz_class(static_cast<long>(divisor)), p + 8);
    const DyadicInterval e = exp(l, p + 8);
    if (rel_ok(e, bits)) return e;
    if (p > (std::int64_t{1} << 24)) throw ResourceError("exp_form: no convergence");
  }
}

bool exact_vanishing(const LogLinearForm& form) {
  std::map<std::uint64_t, __int128> exponent;
  for (const LogTerm& t : form.terms()) {
    if (t.alpha == 1) continue;
    for (const auto& [p, e] : factor(t.alpha.get_num())) exponent[p] += static_cast<__int128>(t.b) * e;
    for (const auto& [p, e] : factor(t.alpha.get_den())) exponent[p] -= static_cast<__int128>(t.b) * e;
  }
  for (const auto& [p, e] : exponent) {
    if (e != 0) return false;
  }
  return true;
}

SignResult sign_linear_form(const LogLinearForm& form, const PrecisionRequest& req) {
  const std::int64_t cap = std::max<std::int64_t>(req.cap_bits, 2);
  std::int64_t prec = std::clamp<std::int64_t>(req.bits, 2, cap);
  bool checked_zero = false;
  for (;;) {
    const DyadicInterval v = form.evaluate(prec);
    if (v.positive()) return {Sign::positive, Provenance::certified_interval, prec};
    if (v.negative()) return {Sign::negative, Provenance::certified_interval, prec};
    if (!checked_zero) {
      if (exact_vanishing(form)) return {Sign::zero, Provenance::exact_vanishing, prec};
      checked_zero = true;
    }
    if (prec >= cap) throw UndecidedError("linear form sign undecided at the precision cap", v, prec);
    prec = std::min(prec * 2, cap);
  }
}

mpz_class matveev_bits(std::size_t m, std::int64_t B, const std::vector<double>& log_a) {
  const double md = static_cast<double>(m);
  double v = 1.4 * std::pow(md, 4.5) * std::pow(30.0, md + 3) * (1 + std::log(static_cast<double>(B)));
  for (double a : log_a) v *= a;
  return mpz_class(std::ceil(v / std::log(2.0))) + 2;
}

mpz_class matveev_bits(const LogLinearForm& form) {
  std::vector<double> log_a;
  for (const LogTerm& t : form.terms()) {
    const mpz_class& u = t.alpha.get_num();
    const mpz_class& w = t.alpha.get_den();
    const mpz_class& h = u > w ? u : w;
    long ex = 0;
    const double hm = mpz_get_d_2exp(&ex, h.get_mpz_t());
    const double height = std::log(hm) + static_cast<double>(ex) * std::log(2.0);
    const DyadicInterval l = log_approx(t.alpha, {53});
    const double abs_log = std::max(std::fabs(l.lo().to_double()), std::fabs(l.hi().to_double()));
    log_a.push_back(std::max({height, abs_log, 0.16}));
  }
  return matveev_bits(form.size(), form.max_coefficient(), log_a);
}

}  // namespace trinom
