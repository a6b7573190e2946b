#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trinom {

bool is_prime_u64(std::uint64_t n);

/// Prime factorization of |n| as (prime, exponent) pairs in increasing order.
/// Trial division to 10^6, then Pollard rho.  Throws ResourceError for
/// |n| >= 2^64 (nothing in this library produces such inputs).
std::vector<std::pair<std::uint64_t, int>> factor(const mpz_class& n);

}  // namespace trinom
