#pragma once

#include <gmpxx.h>

#include "trinom/logform.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

/// u/v in lowest terms, v >= 1.
struct RationalPoint {
  mpz_class u, v = 1;

  static RationalPoint of(const mpq_class& q);
  mpq_class value() const { return mpq_class(u, v); }
  /// h(u/v) = max{|u|, v}
  mpz_class height() const;
};

/// c1 v^a3 + c2 u^a2 v^(a3-a2) + c3 u^a3 == 0, decided exactly.
bool is_rational_root(const Trinomial& f, const RationalPoint& r);

/// Sign of f(u/v): zero for rational roots, otherwise located among the
/// solver's root brackets, refined until the point falls outside all of them.
SignResult sign_at(const Trinomial& f, const RationalPoint& r, const PrecisionRequest& req = {});

}  // namespace trinom
