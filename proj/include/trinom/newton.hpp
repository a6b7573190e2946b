#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "trinom/dyadic.hpp"
#include "trinom/sparse_poly.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

/// Newton runs on f for simple roots and on f' for degenerate ones.
enum class IterateTarget { f, fprime };

struct CertifiedRoot {
  mpq_class value;           ///< the approximate root z0
  DyadicInterval bracket;    ///< contains the associated true root
  bool degenerate = false;
  IterateTarget target = IterateTarget::f;
  bool certified = false;    ///< the contraction gate passed for value
  bool alpha_certified = false;  ///< the normalized start also passed certify_start
};

struct AlphaData {
  std::int64_t d = 0;
  mpq_class gamma_lo, gamma_hi;  ///< (d-1)/2 and (d-1)(d-2)/2
  DyadicInterval x1;             ///< positive root of f'
  DyadicInterval x2;             ///< positive root of f'', or [0,0]
};

/// For c3 > 0 > c2.
AlphaData alpha_data(const Trinomial& f, std::int64_t prec = 96);

SparsePoly iterate_poly(const Trinomial& f, IterateTarget target);

/// z - g(z)/g'(z) to relative accuracy 2^-bits, rounded to a short dyadic.
/// DomainError if g'(z) cannot be separated from zero.
mpq_class newton_step(const SparsePoly& g, const mpq_class& z, const PrecisionRequest& req = {});
mpq_class newton_step(const Trinomial& f, const mpq_class& z, IterateTarget target, const PrecisionRequest& req = {});

/// Theorem-alpha sufficient test: z on the monotone side of the root with
/// |z - zeta| <= zeta / (4 (d-1)(d-2)) and x2 outside [z, zeta].  `zeta` is a
/// bracket for the true root.  For d = 2 the contraction gate is used.
bool certify_start(const Trinomial& f, const mpq_class& z, const DyadicInterval& zeta, const AlphaData& alpha);

/// If K = sup|g''| / (2 inf|g'|) over [lo - E, hi + E] with E = rho + width
/// satisfies K E <= 1/2, returns the shortest dyadic within rho of the
/// bracket; Newton from it then obeys |z_i - zeta| <= 2^(1 - 2^i) |z_0 - zeta|.
std::optional<Dyadic> contraction_start(const SparsePoly& g, const DyadicInterval& bracket, const Dyadic& rho,
                                        std::int64_t prec);

/// Shrinks a bracket holding exactly one sign change of g to width <= target
/// by interval Newton with bisection fallback.  A point bracket means an exact
/// root was hit.  Throws CertificationError if g has no sign change on it,
/// ResourceError past `cap_bits`.
DyadicInterval tighten(const SparsePoly& g, DyadicInterval bracket, const Dyadic& target,
                       std::int64_t cap_bits = std::int64_t{1} << 16, int* steps = nullptr);

/// Shrinks root.bracket to width <= target_abs and re-picks value inside it.
CertifiedRoot refine(const Trinomial& f, const CertifiedRoot& root, const mpq_class& target_abs);

/// Emits a certified start from a bracket: quarters rho from
/// |bracket| / (4 (d-1)(d-2)) until the contraction gate passes.
CertifiedRoot certify_bracket(const Trinomial& f, const DyadicInterval& bracket, IterateTarget target);

}  // namespace trinom
