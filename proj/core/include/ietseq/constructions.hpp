#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ietseq/continued_fraction.hpp"
#include "ietseq/iet.hpp"
#include "ietseq/quad_real.hpp"

namespace ietseq {

// ---------------------------------------------------------------------------
// Three intervals: pi0 = (A, B, C), pi1 = (C, B, A).
// ---------------------------------------------------------------------------

Iet n3_standard(const QuadReal& la, const QuadReal& lb, const QuadReal& lc);

struct N3Certificate {
  QuadReal rotation_number;  // (lb + lc) / (total + lb)
  bool irrational = false;
  ContinuedFraction cf;
  std::optional<MovingAverageReport> moving_average;
  bool low_discrepancy = false;
};

/// Low-discrepancy test for every orbit of the n=3 map: the rotation it is
/// induced from must have an irrational angle with bounded moving averages
/// of its partial quotients.
N3Certificate n3_certificate(const QuadReal& la, const QuadReal& lb, const QuadReal& lc,
                             std::size_t cf_terms = 256, std::size_t averages = 64);

struct N3Lengths {
  QuadReal a;
  QuadReal b;
  QuadReal c;
};

/// Solves (lb + lc) / (1 + lb) = gamma with total length 1 for a given lc.
/// Throws NonPositiveResult naming the length that came out <= 0.
N3Lengths n3_from_gamma(const QuadReal& gamma, const QuadReal& lc);

struct FirstReturn {
  QuadReal point;
  long steps = 0;
};

/// Iterates y -> y + angle (mod rotation_total) from x until the image falls
/// in [0, right). Throws NoReturnWithinBudget after max_steps.
FirstReturn first_return(const QuadReal& rotation_total, const QuadReal& angle, const QuadReal& right,
                         const QuadReal& x, long max_steps = 1000);

// ---------------------------------------------------------------------------
// The f_{L,S} family: L intervals of length beta, then S of length beta^2.
// ---------------------------------------------------------------------------

/// Image row of f_{L,S}: letters 2..L, L+S, 1, L+1..L+S-1.
std::vector<int> fls_image_row(long L, long S);

Iet fls(long L, long S);

struct FlsStart {
  QuadReal x0;
  long q0 = 0;
};

/// Smallest q0 >= 0 with {-r beta - q0 beta^2} in [0, beta) and
/// {-r beta - (q0+1) beta^2} outside it. The scan covers 0..2(L+S)^2 and is
/// widened by doubling up to max_q; NotFoundWithinWindow past that.
FlsStart fls_start(long L, long S, long r, long max_q = 1L << 20);

/// Rational (a, b) with beta^l = a + b*beta, using beta^2 = (1 - L beta)/S.
std::pair<Rational, Rational> beta_power_coords(long L, long S, unsigned l);

/// Integer (m, n) with p = {m beta + n beta^2}, 0 <= n < S, or nullopt when
/// p is not in J_{L,S}.
std::optional<std::pair<Integer, Integer>> jls_coordinates(long L, long S, const QuadReal& p);

struct JlsOrbitReport {
  long L = 0;
  long S = 0;
  long r = 0;
  QuadReal x0;
  long q0 = 0;
  long window = 0;
  long expected_cycle = 0;             // L^2 + L + S
  std::optional<long> observed_cycle;  // first k > 0 with f^k(x0) in [0, beta^2)
  std::vector<int> expected_itinerary;
  std::vector<int> observed_itinerary;
  bool membership_ok = false;
  bool schedule_ok = false;
  std::optional<long> mismatch_at;
  std::string detail;

  bool passed() const { return membership_ok && schedule_ok; }
};

/// Letters visited by x0, f(x0), ..., f^{L^2+L+S}(x0) according to the
/// return schedule: L sweeps down through I_L..I_1, a pass through
/// I_{L+1}..I_{L+S}, one more sweep down to I_1.
std::vector<int> fls_cycle_schedule(long L, long S);

/// Finite check that the f_{L,S} orbit of fls_start(L, S, r) lies in J_{L,S}
/// over |k| <= window and follows the return schedule over one cycle.
/// Throws HypothesisViolated when L < S.
JlsOrbitReport orbit_matches_jls(long L, long S, long r, long window);

/// Pair structure of the orbit of beta under fls(2,2): for each k, the pair
/// (x_2k, x_2k+1) is ({(1-k) beta}, {(2-k) beta + beta^2}) in some order.
/// The orbit is taken with right-closed pieces (with half-open pieces the
/// pairing shifts by one index). Returns the first k in [k_from, k_to] where
/// it fails.
std::optional<long> fls22_pairing_failure(long k_from, long k_to);

}  // namespace ietseq
