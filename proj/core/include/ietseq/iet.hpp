#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ietseq/quad_real.hpp"

namespace ietseq {

/// Combinatorial data of an interval exchange on the alphabet {1..n}.
///
/// Both orders are stored as rows: pi0[p-1] is the letter occupying
/// position p before the exchange, pi1[p-1] the letter at position p after
/// it. With pi0 = Id this reads like the usual two-row picture
///
///     1   2   3   4
///     2   4   1   3
///
/// for the exchange whose image lists intervals 2, 4, 1, 3 from left to right.
struct CombinatorialData {
  std::vector<int> pi0;
  std::vector<int> pi1;

  std::size_t size() const { return pi0.size(); }

  /// Throws InvalidPermutation unless both rows are bijections of {1..n}.
  void validate() const;

  /// Position (1-based) of `letter` in the given row.
  int position0(int letter) const;
  int position1(int letter) const;

  static CombinatorialData identity_top(std::vector<int> pi1);
};

/// False iff for some k < n the first k positions hold the same letters
/// before and after the exchange, i.e. the map splits into two smaller ones.
bool is_admissible(const CombinatorialData& comb);

/// Which end of each subinterval is closed. HalfOpen acts on [0, total)
/// with pieces [a, b); RightClosed acts on (0, total] with pieces (a, b].
enum class Endpoint { HalfOpen, RightClosed };

/// Interval exchange transformation of [0, total) with exact lengths.
/// Letters are 1-based in the public interface.
class Iet {
 public:
  /// Throws NonPositiveLength, RadicandMismatch, InvalidPermutation.
  static Iet build(CombinatorialData comb, std::vector<QuadReal> lengths);

  std::size_t size() const { return lengths_.size(); }
  const CombinatorialData& combinatorics() const { return comb_; }
  const QuadReal& length(int letter) const { return lengths_.at(index(letter)); }
  const std::vector<QuadReal>& lengths() const { return lengths_; }
  const QuadReal& total() const { return total_; }
  /// w_alpha such that f(x) = x + w_alpha on I_alpha.
  const QuadReal& translation(int letter) const { return w_.at(index(letter)); }
  const std::vector<QuadReal>& translations() const { return w_; }
  /// Left endpoint of I_alpha before / after the exchange.
  const QuadReal& left0(int letter) const { return left0_.at(index(letter)); }
  const QuadReal& left1(int letter) const { return left1_.at(index(letter)); }

  /// Letter whose pre-image interval contains x. Throws OutOfDomain.
  int locate(const QuadReal& x, Endpoint ends = Endpoint::HalfOpen) const;
  /// Letter whose image interval contains y. Throws OutOfDomain.
  int locate_image(const QuadReal& y, Endpoint ends = Endpoint::HalfOpen) const;

  QuadReal operator()(const QuadReal& x) const { return evaluate(x); }
  QuadReal evaluate(const QuadReal& x, Endpoint ends = Endpoint::HalfOpen) const;
  QuadReal evaluate_inverse(const QuadReal& y, Endpoint ends = Endpoint::HalfOpen) const;

 private:
  Iet() = default;
  static std::size_t index(int letter) { return static_cast<std::size_t>(letter - 1); }
  static int find_in(std::span<const QuadReal> sorted_lefts, std::span<const int> letters,
                     const QuadReal& total, const QuadReal& x, Endpoint ends);

  CombinatorialData comb_;
  std::vector<QuadReal> lengths_;
  QuadReal total_;
  std::vector<QuadReal> w_;
  std::vector<QuadReal> left0_;
  std::vector<QuadReal> left1_;
  // Breakpoints in positional order, for binary search.
  std::vector<QuadReal> bp0_;
  std::vector<QuadReal> bp1_;
};

struct OrbitSegment {
  QuadReal base_point;
  long first_index = 0;
  std::vector<QuadReal> points;  // f^k(base) for k = first_index, first_index + 1, ...
  std::vector<int> itinerary;    // letter of the interval holding points[i]
};

/// f^k(x0) for k = from..to (negative k use the inverse map).
OrbitSegment orbit(const Iet& f, const QuadReal& x0, long from, long to, Endpoint ends = Endpoint::HalfOpen);

}  // namespace ietseq
