#pragma once

// Integer linear forms in logarithms of positive rationals,
//   Lambda = sum_i b_i ln(alpha_i),
// with exact zero detection (prime-exponent vectors) and interval sign
// determination at doubling precision.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trinom/dyadic.hpp"

namespace trinom {

enum class Sign { negative = -1, zero = 0, positive = 1 };

enum class Provenance { certified_interval, exact_vanishing, fallback_exact };

struct SignResult {
  Sign sign = Sign::zero;
  Provenance provenance = Provenance::certified_interval;
  std::int64_t bits_used = 0;
  bool fallback = false;
};

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }
std::string to_string(Provenance p);

struct LogTerm {
  std::int64_t b;
  mpq_class alpha;
};

class LogLinearForm {
 public:
  LogLinearForm() = default;
  LogLinearForm(std::initializer_list<LogTerm> terms);

  /// Appends b * ln(alpha).  b = 0 is ignored; alpha must be positive.
  LogLinearForm& add(std::int64_t b, const mpq_class& alpha);

  const std::vector<LogTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// max |b_i|, at least 1.
  std::int64_t max_coefficient() const;

  /// Interval containing Lambda, each logarithm computed to `prec` bits.
  DyadicInterval evaluate(std::int64_t prec) const;

 private:
  std::vector<LogTerm> terms_;
};

/// exp(Lambda / divisor) with relative width <= 2^(1-bits).
DyadicInterval exp_form(const LogLinearForm& form, std::int64_t divisor, std::int64_t bits);

/// True iff prod alpha_i^{b_i} = 1.
bool exact_vanishing(const LogLinearForm& form);

/// Certified sign of Lambda.  Zero is only ever reported via exact_vanishing.
/// Throws UndecidedError if the interval still straddles zero at req.cap_bits.
SignResult sign_linear_form(const LogLinearForm& form, const PrecisionRequest& req = {});

/// Baker-Matveev precision: ceil(1.4 m^4.5 30^(m+3) (1 + ln B) prod log A_i / ln 2) + 2
/// with log A_i = max{ln max(|u_i|, v_i), |ln alpha_i|, 0.16}.
mpz_class matveev_bits(const LogLinearForm& form);
/// The same bound with the log A_i supplied directly.
mpz_class matveev_bits(std::size_t m, std::int64_t B, const std::vector<double>& log_a);

}  // namespace trinom
