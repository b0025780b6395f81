#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ietseq/quad_real.hpp"
#include "ietseq/sequences.hpp"

namespace ietseq {

/// Box realizing a discrepancy supremum. The supremum may only be approached:
/// `right_limit` means the box is [left, right] (reached as the open right
/// end shrinks onto `right`), `left_limit` means (left, right).
struct DiscrepancyBox {
  QuadReal left;
  QuadReal right;
  bool left_limit = false;
  bool right_limit = false;
};

struct DiscrepancyResult {
  QuadReal value;  // exact; lies in the field of the inputs
  DiscrepancyBox box;
  std::size_t n = 0;
};

/// Star discrepancy of points in [0, 1) via the sorted closed form
/// max_i max(i/N - x_(i), x_(i) - (i-1)/N). EmptyInput, OutOfDomain.
DiscrepancyResult star_disc_unit(std::span<const QuadReal> points);

/// Extreme discrepancy 1/N + max_i(i/N - x_(i)) - min_i(i/N - x_(i)).
DiscrepancyResult extreme_disc_unit(std::span<const QuadReal> points);

/// Test oracle: evaluates the counting error at every candidate endpoint
/// from both sides. O(N^2), no sorting.
DiscrepancyResult brute_force_star(std::span<const QuadReal> points);

/// Star discrepancy relative to I, computed on the affinely rescaled points.
/// The box is reported in the coordinates of I.
DiscrepancyResult star_disc_interval(std::span<const QuadReal> points, const Interval1D& interval);

/// Multi-dimensional entry point; only dimension 1 is computed, anything
/// else throws Unsupported.
DiscrepancyResult star_disc(std::span<const std::vector<QuadReal>> points);

struct CurveEntry {
  std::size_t n = 0;
  QuadReal dstar;
  DiscrepancyBox box;  // in unit coordinates
};

struct DiscrepancyCurve {
  std::string stream;  // descriptor JSON, or a free-form label
  std::size_t n_max = 0;
  std::size_t step = 0;
  std::vector<CurveEntry> entries;
};

/// D*_N of the first N points (rescaled to the stream's domain) for
/// N = step, 2 step, ..., <= n_max.
DiscrepancyCurve curve(const PointStream& stream, std::size_t n_max, std::size_t step = 1);
DiscrepancyCurve curve_from_points(std::span<const QuadReal> points, const Interval1D& domain, std::size_t step,
                                   std::string label);

struct BlockStat {
  unsigned j = 0;  // block [2^j, 2^{j+1})
  std::size_t n_at_max = 0;
  double max = 0.0;  // max of N D*_N / log N inside the block
};

struct BoundOptions {
  double schmidt_constant = 0.06;
  double growth_factor = 2.0;
  std::size_t c_up_min_n = 2;
};

struct BoundReport {
  double c_up = 0.0;
  std::size_t n_at_c_up = 0;
  std::vector<BlockStat> blocks;
  bool schmidt_ok = false;
  bool low_discrepancy_consistent = false;
};

/// Upper constant max N D*_N / log N and per-dyadic-block maxima checked
/// against the Schmidt constant. The verdict compares the later half of the
/// blocks against the earlier half. InsufficientData below two blocks.
BoundReport bound_monitor(const DiscrepancyCurve& curve, const BoundOptions& options = {});

std::string to_json(const BoundReport& report);

/// `N,Dstar,scaled` with D* rendered at `precision` decimals and
/// scaled = N D*_N / log N (blank at N = 1).
std::string curve_csv(const DiscrepancyCurve& curve, int precision);

}  // namespace ietseq
