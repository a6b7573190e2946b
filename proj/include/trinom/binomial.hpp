#pragma once

// Binomials c1 + c2 x^d.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "trinom/dyadic.hpp"

namespace trinom {

struct Binomial {
  mpz_class c1, c2;
  std::int64_t d = 1;
};

/// Number of distinct real roots; c1, c2 nonzero.
int count_real_roots_binomial(const Binomial& f);

/// z with |z - c^(1/d)| <= rel_err c^(1/d).  The result is the shortest
/// dyadic inside an interval of relative width about min(rel_err, 2^-10/d),
/// so it is also inside Newton's quadratic basin of x^d - c.
mpq_class approx_root_binomial(const mpq_class& c, std::int64_t d, const mpq_class& rel_err);

/// Interval containing c^(1/d), relative width <= 2^(1-bits).
DyadicInterval root_interval(const mpq_class& c, std::int64_t d, std::int64_t bits);

/// Approximations of every real root of f, in increasing order.
std::vector<mpq_class> real_roots_binomial(const Binomial& f, const mpq_class& rel_err);

}  // namespace trinom
