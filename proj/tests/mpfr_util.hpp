#pragma once

// Test-only helpers: exact conversion of dyadics into MPFR values so an
// independent high-precision reference can be compared against intervals.

#include <mpfr.h>

#include <string>

#include "trinom/dyadic.hpp"

namespace testutil {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 1024) { mpfr_init2(v_, prec); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline void set_dyadic(Real& r, const trinom::Dyadic& d) {
  mpfr_set_prec(r.get(), std::max<mpfr_prec_t>(64, d.bit_length() + 8));
  mpfr_set_z_2exp(r.get(), d.mantissa().get_mpz_t(), d.exponent(), MPFR_RNDN);
}

inline void set_rational(Real& r, const mpq_class& q, mpfr_rnd_t rnd) {
  mpfr_set_q(r.get(), q.get_mpq_t(), rnd);
}

/// lo <= v <= hi, comparing exactly.
inline bool contains(const trinom::DyadicInterval& iv, const Real& v) {
  Real lo, hi;
  set_dyadic(lo, iv.lo());
  set_dyadic(hi, iv.hi());
  return mpfr_lessequal_p(lo.get(), v.get()) && mpfr_lessequal_p(v.get(), hi.get());
}

/// Contains the whole enclosure [vlo, vhi].
inline bool contains(const trinom::DyadicInterval& iv, const Real& vlo, const Real& vhi) {
  Real lo, hi;
  set_dyadic(lo, iv.lo());
  set_dyadic(hi, iv.hi());
  return mpfr_lessequal_p(lo.get(), vlo.get()) && mpfr_lessequal_p(vhi.get(), hi.get());
}

}  // namespace testutil
