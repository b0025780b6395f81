#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ietseq/quad_real.hpp"

namespace ietseq {

/// Regular continued fraction [a0; a1, a2, ...] with the eventual period
/// made explicit. Rational inputs expand fully and set `terminated`.
struct ContinuedFraction {
  Integer a0;
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  bool terminated = false;

  bool periodic() const { return !period.empty(); }

  /// Number of partial quotients a_j (j >= 1) that are determined without
  /// running past the computed terms; unbounded once a period is known.
  std::optional<std::size_t> known_terms() const;

  /// a_j for j >= 1, extending through the period.
  const Integer& partial_quotient(std::size_t j) const;

  /// `[a0; p1,...,pk, (q1,...,qm)]`; a trailing `...` marks a truncated
  /// expansion with no detected period.
  std::string str() const;
};

/// Expands x with exact remainders x_{k+1} = 1/(x_k - a_k). The period is
/// detected when a remainder repeats exactly. At most `max_terms` partial
/// quotients after a0 are computed.
ContinuedFraction cf_expand(const QuadReal& x, std::size_t max_terms);

/// Value of the convergent p_k/q_k built from a0..a_k.
Rational convergent(const ContinuedFraction& cf, std::size_t k);

struct MovingAverageReport {
  std::vector<Rational> values;  // values[m-1] = (a_1 + ... + a_m) / m
  Rational supremum_observed;
  std::optional<Rational> limit;  // period mean
  bool bounded = false;
};

/// Moving averages of the partial quotients for m = 1..M. Rational inputs
/// are rejected with RationalInput. Without a detected period only the
/// computed terms are used and `bounded` stays false.
MovingAverageReport moving_average(const ContinuedFraction& cf, std::size_t M);

}  // namespace ietseq
