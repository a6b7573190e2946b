// One PASS/FAIL line per acceptance criterion.  `acceptance 2 5` runs a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trinom/binomial.hpp"
#include "trinom/oracle.hpp"
#include "trinom/sign_eval.hpp"
#include "trinom/solver.hpp"

using namespace trinom;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

long random_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  long v;
  do v = d(rng); while (v == 0);
  return v;
}

std::int64_t bits(const mpz_class& x) { return static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

mpz_class ipow(const mpz_class& b, std::int64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

oracle::RationalInterval rational(const DyadicInterval& x) { return {x.lo().to_rational(), x.hi().to_rational()}; }

template <class F>
void for_each_small(F&& body) {
  for (int a3 = 2; a3 <= 8; ++a3)
    for (int a2 = 1; a2 < a3; ++a2)
      for (int c1 = -5; c1 <= 5; ++c1)
        for (int c2 = -5; c2 <= 5; ++c2)
          for (int c3 = -5; c3 <= 5; ++c3)
            if (c1 && c2 && c3) body(Trinomial(c1, c2, c3, a2, a3));
}

Verdict exhaustive_counts() {
  const auto t0 = Clock::now();
  long total = 0, mismatches = 0, degenerate = 0;
  std::string first;
  for_each_small([&](const Trinomial& f) {
    const SolveReport r = solve_real(f);
    ++total;
    degenerate += std::count_if(r.roots.begin(), r.roots.end(), [](const SolvedRoot& z) { return z.degenerate; }) > 0;
    if (r.m != oracle::real_root_count(f)) {
      if (!mismatches++) first = format_trinomial(f);
    }
  });
  const double t = seconds_since(t0);
  return {mismatches == 0 && t < 300,
          fmt("%ld instances (%ld with a degenerate root), %ld mismatches%s%s, %.1f s", total, degenerate, mismatches,
              first.empty() ? "" : ", first ", first.c_str(), t)};
}

// Criteria 2 and 4 share one corpus.
struct SmaleCorpus {
  long instances = 0, roots = 0, failures = 0, uncertified = 0;
  double worst_c = 0;
  double worst_ratio = 0;
  std::string first;
};

const SmaleCorpus& smale_corpus() {
  static const SmaleCorpus corpus = [] {
    SmaleCorpus s;
    std::mt19937_64 rng(20240601);
    while (s.instances < 1000) {
      const std::int64_t a3 = std::uniform_int_distribution<std::int64_t>(2, 1'000'000)(rng);
      const std::int64_t a2 = std::uniform_int_distribution<std::int64_t>(1, a3 - 1)(rng);
      const Trinomial f(random_nonzero(rng, 1'000'000'000), random_nonzero(rng, 1'000'000'000),
                        random_nonzero(rng, 1'000'000'000), a2, a3);
      const SolveReport r = solve_real(f);
      if (std::any_of(r.roots.begin(), r.roots.end(), [](const SolvedRoot& z) { return z.degenerate; })) continue;
      ++s.instances;
      const SparsePoly g = SparsePoly::of(f);
      const double scale = std::log2(static_cast<double>(a3) * f.height().get_d());
      for (const SolvedRoot& z : r.roots) {
        ++s.roots;
        if (!z.certified) ++s.uncertified;
        const double c = static_cast<double>(std::max(bits(z.value.get_num()), bits(z.value.get_den()))) / scale;
        s.worst_c = std::max(s.worst_c, c);
        const oracle::SmaleReport rep = oracle::smale_check(g, z.value, rational(z.bracket), 6);
        s.worst_ratio = std::max(s.worst_ratio, rep.worst_ratio);
        if (!rep.pass && !s.failures++) s.first = format_trinomial(f) + ": " + rep.reason;
      }
    }
    return s;
  }();
  return corpus;
}

Verdict smale_certification() {
  const auto t0 = Clock::now();
  const SmaleCorpus& s = smale_corpus();
  return {s.failures == 0 && s.uncertified == 0,
          fmt("%ld instances, %ld roots, %ld decay failures, %ld uncertified, worst ratio to bound %.3g%s%s, %.1f s",
              s.instances, s.roots, s.failures, s.uncertified, s.worst_ratio, s.first.empty() ? "" : "; first ",
              s.first.c_str(), seconds_since(t0))};
}

Verdict polylog_scaling() {
  std::mt19937_64 rng(7);
  std::vector<double> medians;
  std::string line;
  for (int e : {10, 20, 30, 40}) {
    const std::int64_t a3 = std::int64_t{1} << e;
    std::vector<double> t;
    for (int i = 0; i < 100; ++i) {
      const std::int64_t a2 = std::uniform_int_distribution<std::int64_t>(1, a3 - 1)(rng);
      const Trinomial f(random_nonzero(rng, 1'000'000), random_nonzero(rng, 1'000'000), random_nonzero(rng, 1'000'000),
                        a2, a3);
      const auto t0 = Clock::now();
      solve_real(f);
      t.push_back(seconds_since(t0));
    }
    std::nth_element(t.begin(), t.begin() + 50, t.end());
    medians.push_back(t[50]);
    line += fmt("%s2^%d: %.2f ms", line.empty() ? "" : ", ", e, 1e3 * t[50]);
  }
  const double ratio = medians.back() / medians.front();
  return {ratio <= 50, line + fmt("; ratio %.2f (limit 50)", ratio)};
}

Verdict height_bound() {
  const SmaleCorpus& s = smale_corpus();
  return {s.worst_c <= 64 && s.roots > 0,
          fmt("fitted C = %.3f over %ld roots (bit length / log2(a3 H), limit 64)", s.worst_c, s.roots)};
}

Verdict sign_agreement() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> deg(2, 100);
  long total = 0, mismatches = 0, zero_mismatches = 0, zeros = 0, fallbacks = 0;
  std::string first;
  while (total < 10000) {
    int a2 = deg(rng), a3 = deg(rng);
    if (a2 == a3) continue;
    if (a2 > a3) std::swap(a2, a3);
    long c1 = random_nonzero(rng, 1'000'000);
    const long c2 = random_nonzero(rng, 1'000'000), c3 = random_nonzero(rng, 1'000'000);
    RationalPoint r;
    if (total % 10 == 0) {
      // plant a root at +-1 by solving for c1
      const long s = (total / 10) % 2 ? 1 : -1;
      const long v = -(c2 * (a2 % 2 && s < 0 ? -1 : 1) + c3 * (a3 % 2 && s < 0 ? -1 : 1));
      if (v == 0) continue;
      c1 = v;
      r = RationalPoint::of(mpq_class(s));
    } else {
      const long v = std::uniform_int_distribution<long>(1, 1'000'000)(rng);
      r = RationalPoint::of(mpq_class(random_nonzero(rng, 1'000'000), v));
    }
    const Trinomial f(c1, c2, c3, a2, a3);
    const int expect = oracle::exact_sign_small(f, r.value());
    const SignResult got = sign_at(f, r);
    ++total;
    zeros += expect == 0;
    fallbacks += got.fallback;
    if (to_int(got.sign) != expect && !mismatches++) first = format_trinomial(f) + " at " + r.value().get_str();
    if ((got.sign == Sign::zero) != is_rational_root(f, r)) ++zero_mismatches;
  }
  return {mismatches == 0 && zero_mismatches == 0,
          fmt("%ld points (%ld roots planted), %ld sign mismatches, %ld zero/rational-root mismatches, %ld fallbacks%s%s, "
              "%.1f s",
              total, zeros, mismatches, zero_mismatches, fallbacks, first.empty() ? "" : ", first ", first.c_str(),
              seconds_since(t0))};
}

Verdict ill_conditioned_fraction() {
  const auto t0 = Clock::now();
  std::string line;
  bool all = true;
  for (auto [a2, a3] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    for (int h : {5, 10, 25, 50}) {
      const oracle::FractionCell c = oracle::fraction_experiment(a2, a3, h);
      all = all && c.ok();
      line += fmt("%s(%d,%d,H=%d) %.3f<=%.3f", line.empty() ? "" : " ", a2, a3, h,
                  static_cast<double>(c.ill_count) / static_cast<double>(c.total), c.bound);
    }
  }
  const double t = seconds_since(t0);
  return {all && t < 120, line + fmt("; %.1f s", t)};
}

Verdict series_validity() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  long total = 0, outside = 0, over_tail = 0;
  for (long n = 2; n <= 8; ++n) {
    for (long m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const double r = r_mn(m, n, 64).lo().to_double();
      for (SeriesKind kind : {SeriesKind::low, SeriesKind::hi, SeriesKind::mid, SeriesKind::hi_minus}) {
        for (int i = 0; i < 20; ++i) {
          const double cd = kind == SeriesKind::mid ? r * (0.02 + 0.9 * unit(rng)) : r * (1.1 + 4 * unit(rng));
          const mpq_class c = from_rational(mpq_class(cd), 20, Round::down).to_rational();
          const std::int64_t ell = 5 + static_cast<std::int64_t>(rng() % 30);
          const DyadicInterval cx = DyadicInterval::from_rational(c, 200);
          const oracle::RationalInterval root = oracle::series_root(kind, m, n, c);
          const DyadicInterval box = eval_series(kind, m, n, cx, {ell, 128, false});
          ++total;
          if (!box.contains(root.first) || !box.contains(root.second)) ++outside;
          // |truncated sum - root| against the geometric tail bound, with the
          // sum evaluated at 400 bits so rounding is negligible.
          const Dyadic tail = tail_bound(kind, m, n, cx, ell, 128);
          const DyadicInterval fine = eval_series(kind, m, n, cx, {ell, 400, false});
          const mpq_class center = fine.midpoint().to_rational();
          const mpq_class rounding = (fine.width(400).to_rational() - 2 * tail.to_rational()) / 2;
          const mpq_class err = std::max(abs(mpq_class(root.first - center)), abs(mpq_class(root.second - center)));
          if (err > tail.to_rational() + rounding + (root.second - root.first)) ++over_tail;
        }
      }
    }
  }
  return {outside == 0 && over_tail == 0,
          fmt("%ld evaluations, %ld miss the oracle root, %ld exceed the tail bound, %.1f s", total, outside, over_tail,
              seconds_since(t0))};
}

int exact_delta_sign(const Trinomial& f) {
  const std::int64_t m = f.a2, n = f.a3;
  return sgn(ipow(m, m) * ipow(n - m, n - m) * ipow(-f.c2, n) - ipow(n, n) * ipow(f.c1, n - m) * ipow(f.c3, m));
}

Verdict discriminant_equivalence() {
  const auto t0 = Clock::now();
  long total = 0, mismatches = 0, zeros = 0, bad_zero = 0;
  auto check = [&](const Trinomial& f) {
    const SignResult s = discriminant_sign(f);
    const int e = exact_delta_sign(f);
    ++total;
    if (to_int(s.sign) != e) ++mismatches;
    if (e == 0) ++zeros;
    if (s.sign == Sign::zero && s.provenance != Provenance::exact_vanishing) ++bad_zero;
  };
  for_each_small(check);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 64)(rng);
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    check(Trinomial(random_nonzero(rng, 1'000'000'000), random_nonzero(rng, 1'000'000'000),
                    random_nonzero(rng, 1'000'000'000), m, n));
  }
  return {mismatches == 0 && bad_zero == 0,
          fmt("%ld instances (%ld with Delta = 0), %ld mismatches, %ld zeros not from exact vanishing, %.1f s", total,
              zeros, mismatches, bad_zero, seconds_since(t0))};
}

Verdict binomial_smale() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(77);
  long failures = 0;
  double worst = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    const long c = std::uniform_int_distribution<long>(1, 1'000'000'000)(rng);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 1'000'000)(rng);
    const mpq_class z = approx_root_binomial(c, d, mpq_class(2, d - 1));
    const SparsePoly g({{-c, 0}, {1, d}});
    const oracle::SmaleReport rep = oracle::smale_check(g, z, rational(root_interval(c, d, 300)), 6);
    worst = std::max(worst, rep.worst_ratio);
    if (!rep.pass && !failures++) first = fmt("x^%lld - %ld: ", static_cast<long long>(d), c) + rep.reason;
  }
  return {failures == 0, fmt("1000 instances, %ld failures, worst ratio to bound %.3g%s%s, %.1f s", failures, worst,
                             first.empty() ? "" : ", first ", first.c_str(), seconds_since(t0))};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"exhaustive root counts vs bisection oracle", exhaustive_counts},
      {"Smale decay of certified roots", smale_certification},
      {"polylog scaling in the degree", polylog_scaling},
      {"height of emitted roots", height_bound},
      {"sign_at vs exact evaluation", sign_agreement},
      {"ill-conditioned fraction bound", ill_conditioned_fraction},
      {"series truncation and tail bound", series_validity},
      {"discriminant sign vs exact Delta", discriminant_equivalence},
      {"binomial start points obey Smale decay", binomial_smale},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::printf("criterion %d %s  %s: %s\n", id, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
