#include "trinom/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>

#include "trinom/binomial.hpp"

namespace trinom {

std::string to_string(BracketSource s) {
  switch (s) {
    case BracketSource::series: return "series";
    case BracketSource::quadratic: return "quadratic";
    case BracketSource::binomial: return "binomial";
    case BracketSource::bisection: return "bisection";
  }
  return "?";
}

namespace {

constexpr std::int64_t kMaxSeriesTerms = 512;

std::int64_t bw(std::int64_t x) { return std::bit_width(static_cast<std::uint64_t>(x)); }
std::int64_t bits_of(const mpz_class& x) { return static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

// x1^(a3 - a2) for the positive critical point x1 of f.
mpq_class critical_base(const Trinomial& f) {
  mpq_class q(-mpz_class(static_cast<long>(f.a2)) * f.c2, mpz_class(static_cast<long>(f.a3)) * f.c3);
  q.canonicalize();
  return q;
}

struct Candidate {
  DyadicInterval y;  ///< bracket in normalized coordinates
  BracketSource source;
  SeriesKind kind = SeriesKind::low;
  std::int64_t ell = 0;
};

// y -> x: undo the reciprocal, then take delta-th roots.
DyadicInterval to_original(const DyadicInterval& y, const TransformTrace& t, std::int64_t prec) {
  DyadicInterval x = y;
  if (t.xflip < 0) x = div(DyadicInterval(Dyadic(1)), x, prec);
  if (t.delta > 1) {
    x = DyadicInterval(rational_power(x.lo().to_rational(), 1, t.delta, prec).lo(),
                       rational_power(x.hi().to_rational(), 1, t.delta, prec).hi());
  }
  return x;
}

// Exact sqrt bracket for c1 + c2 y + c3 y^2, c3 > 0 > c2.
std::vector<Candidate> quadratic_brackets(const Trinomial& g, std::int64_t prec) {
  const mpz_class disc = g.c2 * g.c2 - 4 * g.c1 * g.c3;
  const std::int64_t k = prec + bits_of(disc);
  mpz_class s;
  mpz_class scaled = disc << static_cast<mp_bitcnt_t>(2 * k);
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  const DyadicInterval root_d(Dyadic(s, -k), Dyadic(mpz_class(s + 1), -k));
  // -c2 + sqrt(D) and its partner 2 c1 / (-c2 + sqrt(D)), free of cancellation.
  const DyadicInterval plus = add(DyadicInterval(Dyadic(mpz_class(-g.c2))), root_d, prec);
  std::vector<Candidate> out;
  if (g.c1 > 0) out.push_back({div(DyadicInterval(Dyadic(mpz_class(2 * g.c1))), plus, prec), BracketSource::quadratic});
  out.push_back({div_int(plus, 2 * g.c3, prec), BracketSource::quadratic});
  return out;
}

std::optional<std::vector<Candidate>> series_brackets(const NormalizedTrinomial& g) {
  const std::int64_t m = g.a2;
  const std::int64_t n = g.a3;
  const std::int64_t rel_bits = 2 * bw(n) + 8;
  const std::int64_t cbits = rel_bits + 2 * bw(n) + 16;
  const SeriesParameters sp = series_parameters(g, {cbits});
  const bool above = sp.r.hi() < sp.c.lo();
  const bool below = sp.c.hi() < sp.r.lo();
  std::vector<SeriesKind> kinds;
  if (g.c1 > 0) {
    if (!above) return std::nullopt;
    kinds = {SeriesKind::low, SeriesKind::hi};
  } else if (above) {
    kinds = {SeriesKind::hi_minus};
  } else if (below) {
    kinds = {SeriesKind::mid};
  } else {
    return std::nullopt;
  }
  const std::int64_t max_ell = std::min(truncation_length(n, g.height()), kMaxSeriesTerms);
  std::vector<Candidate> out;
  for (SeriesKind kind : kinds) {
    const std::int64_t ell = adaptive_length(kind, m, n, sp.c, std::ldexp(1.0, -rel_bits), max_ell);
    if (ell < 0) return std::nullopt;
    const DyadicInterval x = eval_series(kind, m, n, sp.c, {ell, cbits, true});
    const DyadicInterval y = mul(sp.beta, x, cbits);
    if (!y.positive()) return std::nullopt;
    out.push_back({y, BracketSource::series, kind, ell});
  }
  return out;
}

// Bisection brackets in f's own coordinates: the Cauchy annulus, split at the
// critical point when there are two roots.
std::vector<DyadicInterval> fallback_brackets(const Trinomial& f, int count, std::int64_t cap) {
  const NormBounds nb = root_norm_bounds(f);
  const Dyadic lo = nb.lo.lo();
  const Dyadic hi = nb.hi.hi();
  if (count == 1) return {DyadicInterval(lo, hi)};
  const SparsePoly p = SparsePoly::of(f);
  const mpq_class q = critical_base(f);
  const int inner = -sgn(f.c1);
  for (std::int64_t bits = 64;; bits *= 2) {
    const DyadicInterval x1 = rational_power(q, 1, f.a3 - f.a2, bits);
    const std::int64_t prec = bits + 2 * bw(f.a3) + 64;
    const auto s1 = p.eval(DyadicInterval(x1.lo()), prec).sign();
    const auto s2 = p.eval(DyadicInterval(x1.hi()), prec).sign();
    if (s1 == inner && s2 == inner) return {DyadicInterval(lo, x1.lo()), DyadicInterval(x1.hi(), hi)};
    if (bits >= cap) throw UndecidedError("critical value sign undecided", p.eval(x1, prec), bits);
  }
}

SolvedRoot emit(const Trinomial& f, const DyadicInterval& x, IterateTarget target, BracketSource source) {
  SolvedRoot r;
  static_cast<CertifiedRoot&>(r) = certify_bracket(f, x, target);
  r.source = source;
  return r;
}

}  // namespace

SolveReport solve_positive(const Trinomial& f, const PrecisionRequest& req) {
  SolveReport rep;
  rep.ill_conditioned = is_ill_conditioned(f, req);
  const Normalized nz = normalize(f);
  const NormalizedTrinomial& g = nz.f;
  if (!g.has_positive_roots) {
    rep.messages.emplace_back(kMsgNoPositiveRootsPattern);
    return rep;
  }

  int count = 1;
  bool degenerate = false;
  if (g.a3 == 2) {
    const int s = sgn(g.c2 * g.c2 - 4 * g.c1 * g.c3);
    if (g.c1 > 0) {
      count = s > 0 ? 2 : s == 0 ? 1 : 0;
      degenerate = s == 0;
    }
  } else {
    const RootCount rc = count_positive_roots(g, req);
    count = rc.count;
    degenerate = rc.degenerate;
  }
  if (count == 0) {
    rep.messages.emplace_back(kMsgNoPositiveRootsDelta);
    return rep;
  }
  rep.messages.emplace_back(count == 2 ? kMsgTwoRoots : kMsgOneRoot);

  if (degenerate) {
    // The double root is the positive root of the binomial factor of f'.
    const mpq_class q = critical_base(f);
    const mpz_class scale = 96 * f.height() * mpz_class(static_cast<long>(f.a3 - 1)) * (f.a3 - 1);
    const DyadicInterval x = root_interval(q, f.a3 - f.a2, bits_of(scale) + 2);
    rep.roots.push_back(emit(f, x, IterateTarget::fprime, BracketSource::binomial));
    rep.m = 1;
    return rep;
  }

  std::optional<std::vector<Candidate>> cands;
  if (g.a3 == 2) {
    cands = quadratic_brackets(g, 64);
  } else {
    try {
      cands = series_brackets(g);
    } catch (const DomainError&) {
      cands.reset();
    }
  }
  if (cands) {
    const std::int64_t prec = 64 + 2 * bw(f.a3) + 2 * bw(g.a3);
    std::optional<AlphaData> alpha;
    if (g.a3 >= 3) alpha = alpha_data(g);
    try {
      for (const Candidate& c : *cands) {
        SolvedRoot r = emit(f, to_original(c.y, nz.trace, prec), IterateTarget::f, c.source);
        r.kind = c.kind;
        r.ell = c.ell;
        if (alpha) {
          r.alpha_certified = certify_start(g, c.y.lo().to_rational(), c.y, *alpha) ||
                              certify_start(g, c.y.hi().to_rational(), c.y, *alpha);
        }
        rep.roots.push_back(std::move(r));
      }
    } catch (const CertificationError&) {
      // a series bracket held both roots or none: fall back
      rep.roots.clear();
    }
  }
  if (rep.roots.empty()) {
    for (const DyadicInterval& x : fallback_brackets(f, count, req.cap_bits)) {
      rep.roots.push_back(emit(f, x, IterateTarget::f, BracketSource::bisection));
    }
  }
  std::sort(rep.roots.begin(), rep.roots.end(), [](const SolvedRoot& a, const SolvedRoot& b) { return a.value < b.value; });
  rep.m = static_cast<int>(rep.roots.size());
  return rep;
}

RootTally count_real_roots(const Trinomial& f, const PrecisionRequest& req) {
  RootTally t;
  for (int side = 0; side < 2; ++side) {
    const NormalizedTrinomial g = normalize(side == 0 ? f : f.reflected()).f;
    RootCount rc;
    if (!g.has_positive_roots) {
      rc = {0, false};
    } else if (g.c1 < 0) {
      rc = {1, false};
    } else {
      rc = count_positive_roots(g, req);
    }
    (side == 0 ? t.positive : t.negative) = rc.count;
    t.degenerate += rc.degenerate ? 1 : 0;
  }
  return t;
}

SolveReport solve_real(const Trinomial& f, const PrecisionRequest& req) {
  SolveReport rep = solve_positive(f, req);
  SolveReport neg = solve_positive(f.reflected(), req);
  for (SolvedRoot& r : neg.roots) {
    r.value = -r.value;
    r.bracket = -r.bracket;
    rep.roots.push_back(std::move(r));
  }
  rep.messages.push_back(neg.messages.front());
  std::sort(rep.roots.begin(), rep.roots.end(), [](const SolvedRoot& a, const SolvedRoot& b) { return a.value < b.value; });
  rep.m = static_cast<int>(rep.roots.size());
  return rep;
}

}  // namespace trinom
