#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ietseq/iet.hpp"
#include "ietseq/quad_real.hpp"

namespace ietseq {

/// Half-open interval [left, right) with left < right.
class Interval1D {
 public:
  Interval1D(QuadReal left, QuadReal right);
  static Interval1D unit() { return {QuadReal(0), QuadReal(1)}; }

  const QuadReal& left() const { return left_; }
  const QuadReal& right() const { return right_; }
  QuadReal length() const { return right_ - left_; }

  bool contains(const QuadReal& x) const { return left_ <= x && x < right_; }
  bool contains(const Interval1D& other) const { return left_ <= other.left_ && other.right_ <= right_; }
  std::optional<Interval1D> intersect(const Interval1D& other) const;

  /// Affine map onto [0, 1).
  QuadReal to_unit(const QuadReal& x) const { return (x - left_) / length(); }

  friend bool operator==(const Interval1D&, const Interval1D&) = default;

 private:
  QuadReal left_;
  QuadReal right_;
};

class PointStream;

struct KroneckerKind {
  QuadReal z;
};
struct LsKind {
  long L = 1;
  long S = 1;
};
struct JlsKind {
  long L = 1;
  long S = 1;
};
struct IetOrbitKind {
  std::shared_ptr<const Iet> map;
  QuadReal x0;
};
struct RestrictionKind {
  std::shared_ptr<const PointStream> inner;
  Interval1D sub;
  std::size_t scan_cap;
};

/// Pulls successive points of a stream; each cursor starts at index 0.
class PointCursor {
 public:
  virtual ~PointCursor() = default;
  virtual QuadReal next() = 0;
};

/// Immutable description of a point sequence. The k-th point depends only on
/// the descriptor and k; cursors replay the same sequence every time.
class PointStream {
 public:
  using Kind = std::variant<KroneckerKind, LsKind, JlsKind, IetOrbitKind, RestrictionKind>;
  static constexpr std::size_t kDefaultScanCap = 1000000;

  static PointStream kronecker(QuadReal z);
  static PointStream ls(long L, long S);
  static PointStream jls(long L, long S);
  static PointStream iet_orbit(Iet map, QuadReal x0);
  /// Requires sub to lie inside inner.domain().
  static PointStream restriction(PointStream inner, Interval1D sub, std::size_t scan_cap = kDefaultScanCap);

  const Kind& kind() const { return kind_; }
  const Interval1D& domain() const { return domain_; }

  std::unique_ptr<PointCursor> cursor() const;
  /// First n points. Restrictions throw BudgetExhausted past their scan cap.
  std::vector<QuadReal> take(std::size_t n) const;

  /// JSON descriptor {kind, params, domain} with exact strings.
  std::string descriptor_json() const;

 private:
  PointStream(Kind kind, Interval1D domain) : kind_(std::move(kind)), domain_(std::move(domain)) {}

  Kind kind_;
  Interval1D domain_;
};

/// {n z}.
QuadReal kronecker_point(const QuadReal& z, std::uint64_t n);

struct LsInterval {
  QuadReal left;
  bool is_long = false;  // length beta^level, otherwise beta^(level+1)
};

struct LsPartition {
  long L = 1;
  long S = 1;
  unsigned level = 1;
  std::vector<LsInterval> intervals;  // ordered by left endpoint
  Integer long_count;                 // l_n
  Integer short_count;                // s_n

  Integer total_count() const { return long_count + short_count; }
};

/// Level-n refinement of [0, 1): every interval of maximal length beta^(n-1)
/// splits into L pieces of beta^n followed by S pieces of beta^(n+1).
LsPartition ls_partition(long L, long S, unsigned level);

struct LsCounts {
  Integer long_count;
  Integer short_count;
};
/// (l_n, s_n) from l_1 = L, s_1 = S, l_{n+1} = L l_n + s_n, s_{n+1} = S l_n.
LsCounts ls_counts(long L, long S, unsigned level);

/// First `count` points of the LS-sequence in its canonical order.
std::vector<QuadReal> ls_points(long L, long S, std::size_t count);

/// {k beta + (i - kS) beta^2} with k = floor(i / S).
QuadReal jls_point(long L, long S, std::uint64_t i);

/// First `count` points of `inner` that fall in `sub`, in order. Throws
/// BudgetExhausted when more than scan_cap inner points are examined.
std::vector<QuadReal> restrict_stream(const PointStream& inner, const Interval1D& sub, std::size_t count,
                                      std::size_t scan_cap = PointStream::kDefaultScanCap);

}  // namespace ietseq
