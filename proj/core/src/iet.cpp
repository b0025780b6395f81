#include "ietseq/iet.hpp"

#include <algorithm>
#include <numeric>

#include "ietseq/error.hpp"

namespace ietseq {

namespace {

void validate_row(const std::vector<int>& row, std::size_t n, const char* name) {
  if (row.size() != n) {
    throw Error(ErrorCode::InvalidPermutation, std::string(name) + " has the wrong length");
  }
  std::vector<bool> hit(n, false);
  for (int letter : row) {
    if (letter < 1 || static_cast<std::size_t>(letter) > n || hit[static_cast<std::size_t>(letter - 1)]) {
      throw Error(ErrorCode::InvalidPermutation, std::string(name) + " is not a bijection of {1..n}");
    }
    hit[static_cast<std::size_t>(letter - 1)] = true;
  }
}

int position_in(const std::vector<int>& row, int letter) {
  auto it = std::find(row.begin(), row.end(), letter);
  if (it == row.end()) throw Error(ErrorCode::InvalidPermutation, "unknown letter " + std::to_string(letter));
  return static_cast<int>(it - row.begin()) + 1;
}

}  // namespace

void CombinatorialData::validate() const {
  if (pi0.empty()) throw Error(ErrorCode::InvalidPermutation, "empty alphabet");
  validate_row(pi0, pi0.size(), "pi0");
  validate_row(pi1, pi0.size(), "pi1");
}

int CombinatorialData::position0(int letter) const { return position_in(pi0, letter); }
int CombinatorialData::position1(int letter) const { return position_in(pi1, letter); }

CombinatorialData CombinatorialData::identity_top(std::vector<int> pi1) {
  CombinatorialData comb;
  comb.pi0.resize(pi1.size());
  std::iota(comb.pi0.begin(), comb.pi0.end(), 1);
  comb.pi1 = std::move(pi1);
  return comb;
}

bool is_admissible(const CombinatorialData& comb) {
  comb.validate();
  const std::size_t n = comb.size();
  std::vector<bool> in0(n + 1, false);
  std::vector<bool> in1(n + 1, false);
  std::size_t common = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto top = static_cast<std::size_t>(comb.pi0[k]);
    const auto bottom = static_cast<std::size_t>(comb.pi1[k]);
    in0[top] = true;
    if (in1[top]) ++common;
    in1[bottom] = true;
    if (in0[bottom]) ++common;
    if (common == k + 1) return false;
  }
  return true;
}

Iet Iet::build(CombinatorialData comb, std::vector<QuadReal> lengths) {
  comb.validate();
  const std::size_t n = comb.size();
  if (lengths.size() != n) throw Error(ErrorCode::InvalidParams, "need one length per letter");
  Iet f;
  f.total_ = QuadReal(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (lengths[i].sign() <= 0) {
      throw Error(ErrorCode::NonPositiveLength,
                  "length of letter " + std::to_string(i + 1) + " is " + lengths[i].str());
    }
    f.total_ += lengths[i];
  }
  f.left0_.assign(n, QuadReal(0));
  f.left1_.assign(n, QuadReal(0));
  f.bp0_.reserve(n);
  f.bp1_.reserve(n);
  QuadReal acc0(0);
  QuadReal acc1(0);
  for (std::size_t p = 0; p < n; ++p) {
    const auto a0 = index(comb.pi0[p]);
    const auto a1 = index(comb.pi1[p]);
    f.left0_[a0] = acc0;
    f.left1_[a1] = acc1;
    f.bp0_.push_back(acc0);
    f.bp1_.push_back(acc1);
    acc0 += lengths[a0];
    acc1 += lengths[a1];
  }
  f.w_.reserve(n);
  for (std::size_t a = 0; a < n; ++a) f.w_.push_back(f.left1_[a] - f.left0_[a]);
  f.comb_ = std::move(comb);
  f.lengths_ = std::move(lengths);
  return f;
}

int Iet::find_in(std::span<const QuadReal> sorted_lefts, std::span<const int> letters, const QuadReal& total,
                  const QuadReal& x, Endpoint ends) {
  if (ends == Endpoint::HalfOpen) {
    if (x.sign() < 0 || x >= total) {
      throw Error(ErrorCode::OutOfDomain, x.str() + " is outside [0, " + total.str() + ")");
    }
    // Last breakpoint <= x; breakpoints belong to the interval on their right.
    auto it = std::upper_bound(sorted_lefts.begin(), sorted_lefts.end(), x);
    return letters[static_cast<std::size_t>(it - sorted_lefts.begin()) - 1];
  }
  if (x.sign() <= 0 || x > total) {
    throw Error(ErrorCode::OutOfDomain, x.str() + " is outside (0, " + total.str() + "]");
  }
  // Last breakpoint < x.
  auto it = std::lower_bound(sorted_lefts.begin(), sorted_lefts.end(), x);
  return letters[static_cast<std::size_t>(it - sorted_lefts.begin()) - 1];
}

int Iet::locate(const QuadReal& x, Endpoint ends) const { return find_in(bp0_, comb_.pi0, total_, x, ends); }

int Iet::locate_image(const QuadReal& y, Endpoint ends) const {
  return find_in(bp1_, comb_.pi1, total_, y, ends);
}

QuadReal Iet::evaluate(const QuadReal& x, Endpoint ends) const { return x + w_[index(locate(x, ends))]; }

QuadReal Iet::evaluate_inverse(const QuadReal& y, Endpoint ends) const {
  return y - w_[index(locate_image(y, ends))];
}

OrbitSegment orbit(const Iet& f, const QuadReal& x0, long from, long to, Endpoint ends) {
  if (from > to) throw Error(ErrorCode::InvalidParams, "orbit needs from <= to");
  OrbitSegment seg;
  seg.base_point = x0;
  seg.first_index = from;
  QuadReal x = x0;
  f.locate(x, ends);  // domain check
  for (long k = 0; k > from; --k) x = f.evaluate_inverse(x, ends);
  for (long k = 0; k < from; ++k) x = f.evaluate(x, ends);
  const auto count = static_cast<std::size_t>(to - from + 1);
  seg.points.reserve(count);
  seg.itinerary.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int letter = f.locate(x, ends);
    seg.points.push_back(x);
    seg.itinerary.push_back(letter);
    if (i + 1 < count) x = x + f.translation(letter);
  }
  return seg;
}

}  // namespace ietseq
