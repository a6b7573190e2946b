#include "trinom/sparse_poly.hpp"

#include <algorithm>

namespace trinom {

SparsePoly::SparsePoly(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  for (Monomial& t : terms) {
    if (t.e < 0) throw DomainError("negative exponent in polynomial");
    if (!terms_.empty() && terms_.back().e == t.e) {
      terms_.back().c += t.c;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Monomial& t) { return t.c == 0; });
}

SparsePoly SparsePoly::of(const Trinomial& f) { return SparsePoly({{f.c1, 0}, {f.c2, f.a2}, {f.c3, f.a3}}); }

SparsePoly SparsePoly::derivative() const {
  std::vector<Monomial> out;
  for (const Monomial& t : terms_) {
    if (t.e > 0) out.push_back({t.c * mpz_class(static_cast<long>(t.e)), t.e - 1});
  }
  return SparsePoly(std::move(out));
}

DyadicInterval SparsePoly::eval(const DyadicInterval& x, std::int64_t prec) const {
  DyadicInterval sum(Dyadic(0));
  for (const Monomial& t : terms_) {
    const DyadicInterval p = t.e == 0 ? DyadicInterval(Dyadic(1)) : pow(x, static_cast<std::uint64_t>(t.e), prec);
    sum = add(sum, mul_int(p, t.c, prec), prec);
  }
  return sum;
}

mpq_class SparsePoly::eval_exact(const mpq_class& x_in, std::int64_t max_bits) const {
  mpq_class x = x_in;
  x.canonicalize();
  const std::int64_t size = static_cast<std::int64_t>(mpz_sizeinbase(x.get_num_mpz_t(), 2) +
                                                      mpz_sizeinbase(x.get_den_mpz_t(), 2));
  if (static_cast<double>(degree()) * static_cast<double>(size) > static_cast<double>(max_bits)) {
    throw ResourceError("exact evaluation would exceed " + std::to_string(max_bits) + " bits");
  }
  // Common denominator v^deg keeps everything integral.
  const mpz_class& u = x.get_num();
  const mpz_class& v = x.get_den();
  const auto deg = static_cast<unsigned long>(degree());
  mpz_class total = 0;
  for (const Monomial& t : terms_) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(t.e));
    mpz_pow_ui(b.get_mpz_t(), v.get_mpz_t(), deg - static_cast<unsigned long>(t.e));
    total += t.c * a * b;
  }
  mpz_class vd;
  mpz_pow_ui(vd.get_mpz_t(), v.get_mpz_t(), deg);
  mpq_class out(total, vd);
  out.canonicalize();
  return out;
}

}  // namespace trinom
