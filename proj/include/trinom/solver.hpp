#pragma once

#include <string>
#include <vector>

#include "trinom/newton.hpp"
#include "trinom/series.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

inline constexpr const char* kMsgNoPositiveRootsPattern = "Your f has no positive roots.";
inline constexpr const char* kMsgOneRoot = "z₁ is your only positive approximate root.";
inline constexpr const char* kMsgNoPositiveRootsDelta = "Your trinomial has no positive roots.";
inline constexpr const char* kMsgTwoRoots = "z₁ and z₂ are your only positive approximate roots.";

/// How each root bracket was first obtained.
enum class BracketSource { series, quadratic, binomial, bisection };
std::string to_string(BracketSource s);

struct SolvedRoot : CertifiedRoot {
  BracketSource source = BracketSource::series;
  SeriesKind kind = SeriesKind::low;  ///< meaningful for source == series
  std::int64_t ell = 0;
};

struct SolveReport {
  std::vector<SolvedRoot> roots;  ///< increasing
  int m = 0;
  bool ill_conditioned = false;
  /// One message per half-line solved: positive roots, then (solve_real) f(-x).
  std::vector<std::string> messages;
};

struct RootTally {
  int positive = 0;
  int negative = 0;
  int degenerate = 0;  ///< how many of the roots are double roots
  int total() const { return positive + negative; }
};

/// Distinct real roots counted by sign pattern and discriminant sign only.
RootTally count_real_roots(const Trinomial& f, const PrecisionRequest& req = {});

/// Approximate roots of f on (0, inf), each certified in f's own coordinates.
SolveReport solve_positive(const Trinomial& f, const PrecisionRequest& req = {});

/// All distinct real roots.
SolveReport solve_real(const Trinomial& f, const PrecisionRequest& req = {});

}  // namespace trinom
