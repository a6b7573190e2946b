#include "trinom/binomial.hpp"

#include <algorithm>
#include <bit>

#include "trinom/trinomial.hpp"

namespace trinom {

int count_real_roots_binomial(const Binomial& f) {
  if (f.c1 == 0 || f.c2 == 0 || f.d < 1) throw DomainError("binomial needs nonzero coefficients and d >= 1");
  if (f.d % 2 == 1) return 1;
  return sgn(f.c1) != sgn(f.c2) ? 2 : 0;
}

DyadicInterval root_interval(const mpq_class& c, std::int64_t d, std::int64_t bits) {
  if (c <= 0 || d < 1) throw DomainError("root_interval needs c > 0 and d >= 1");
  return rational_power(c, 1, d, bits);
}

mpq_class approx_root_binomial(const mpq_class& c, std::int64_t d, const mpq_class& rel_err) {
  if (c <= 0 || d < 1) throw DomainError("approx_root_binomial needs c > 0 and d >= 1");
  if (rel_err <= 0 || rel_err >= 1) throw DomainError("approx_root_binomial needs 0 < rel_err < 1");
  const std::int64_t log_d = std::bit_width(static_cast<std::uint64_t>(d));
  const std::int64_t want = std::max<std::int64_t>(-floor_log2(rel_err), log_d + 10);
  const DyadicInterval iv = root_interval(c, d, want + 3);
  return simplest(iv).to_rational();
}

std::vector<mpq_class> real_roots_binomial(const Binomial& f, const mpq_class& rel_err) {
  const int count = count_real_roots_binomial(f);
  std::vector<mpq_class> out;
  if (count == 0) return out;
  mpq_class c(-f.c1, f.c2);
  c.canonicalize();
  // Odd d: the single real root has the sign of c.
  const mpq_class z = approx_root_binomial(abs(c), f.d, rel_err);
  if (count == 1) {
    out.push_back(sgn(c) < 0 ? mpq_class(-z) : z);
  } else {
    out.push_back(-z);
    out.push_back(z);
  }
  return out;
}

}  // namespace trinom
