#include "ietseq/sequences.hpp"

#include <json.hpp>

#include "ietseq/error.hpp"

namespace ietseq {

namespace {

void require_ls_params(long L, long S) {
  if (L < 1 || S < 1) {
    throw Error(ErrorCode::InvalidParams, "need L >= 1 and S >= 1, got L=" + std::to_string(L) +
                                              " S=" + std::to_string(S));
  }
}

class KroneckerCursor final : public PointCursor {
 public:
  explicit KroneckerCursor(const QuadReal& z) : step_(frac(z)) {}
  QuadReal next() override {
    QuadReal out = x_;
    x_ += step_;
    if (x_ >= QuadReal(1)) x_ -= QuadReal(1);
    return out;
  }

 private:
  QuadReal step_;
  QuadReal x_{0};
};

// Extends the prefix one level at a time; level n+1 starts with level n.
class LsCursor final : public PointCursor {
 public:
  LsCursor(long L, long S) : L_(L), S_(S), beta_(beta(L, S)) {
    for (long i = 0; i < L_; ++i) points_.push_back(QuadReal(i) * beta_);
    const QuadReal b2 = beta_ * beta_;
    for (long j = 0; j < S_; ++j) points_.push_back(QuadReal(L_) * beta_ + QuadReal(j) * b2);
    long_count_ = static_cast<std::size_t>(L_);
    short_count_ = static_cast<std::size_t>(S_);
    power_ = b2;  // beta^{level+1}
  }

  QuadReal next() override {
    if (index_ == points_.size()) extend();
    return points_[index_++];
  }

  void extend() {
    const QuadReal next_power = power_ * beta_;  // beta^{level+2}
    const std::size_t seeds = long_count_;
    points_.reserve(points_.size() + seeds * static_cast<std::size_t>(L_ + S_ - 1));
    for (long i = 1; i <= L_; ++i) {
      const QuadReal shift = QuadReal(i) * power_;
      for (std::size_t k = 0; k < seeds; ++k) points_.push_back(points_[k] + shift);
    }
    for (long j = 1; j < S_; ++j) {
      const QuadReal shift = QuadReal(L_) * power_ + QuadReal(j) * next_power;
      for (std::size_t k = 0; k < seeds; ++k) points_.push_back(points_[k] + shift);
    }
    const std::size_t l = long_count_;
    long_count_ = static_cast<std::size_t>(L_) * l + short_count_;
    short_count_ = static_cast<std::size_t>(S_) * l;
    power_ = next_power;
  }

 private:
  long L_;
  long S_;
  QuadReal beta_;
  QuadReal power_;
  std::vector<QuadReal> points_;
  std::size_t long_count_ = 0;
  std::size_t short_count_ = 0;
  std::size_t index_ = 0;
};

class JlsCursor final : public PointCursor {
 public:
  JlsCursor(long L, long S) : L_(L), S_(S) {}
  QuadReal next() override { return jls_point(L_, S_, i_++); }

 private:
  long L_;
  long S_;
  std::uint64_t i_ = 0;
};

class OrbitCursor final : public PointCursor {
 public:
  OrbitCursor(std::shared_ptr<const Iet> map, QuadReal x0) : map_(std::move(map)), x_(std::move(x0)) {}
  QuadReal next() override {
    QuadReal out = x_;
    x_ = map_->evaluate(x_);
    return out;
  }

 private:
  std::shared_ptr<const Iet> map_;
  QuadReal x_;
};

class RestrictionCursor final : public PointCursor {
 public:
  RestrictionCursor(std::unique_ptr<PointCursor> inner, Interval1D sub, std::size_t cap)
      : inner_(std::move(inner)), sub_(std::move(sub)), cap_(cap) {}
  QuadReal next() override {
    for (std::size_t scanned = 0; scanned < cap_; ++scanned) {
      QuadReal x = inner_->next();
      if (sub_.contains(x)) return x;
    }
    throw Error(ErrorCode::BudgetExhausted,
                "no point of the inner stream hit the subinterval within " + std::to_string(cap_) + " steps");
  }

 private:
  std::unique_ptr<PointCursor> inner_;
  Interval1D sub_;
  std::size_t cap_;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Interval1D::Interval1D(QuadReal left, QuadReal right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_ < right_)) {
    throw Error(ErrorCode::InvalidParams, "empty interval [" + left_.str() + ", " + right_.str() + ")");
  }
}

std::optional<Interval1D> Interval1D::intersect(const Interval1D& other) const {
  const QuadReal& lo = left_ < other.left_ ? other.left_ : left_;
  const QuadReal& hi = right_ < other.right_ ? right_ : other.right_;
  if (!(lo < hi)) return std::nullopt;
  return Interval1D(lo, hi);
}

PointStream PointStream::kronecker(QuadReal z) { return {KroneckerKind{std::move(z)}, Interval1D::unit()}; }

PointStream PointStream::ls(long L, long S) {
  require_ls_params(L, S);
  return {LsKind{L, S}, Interval1D::unit()};
}

PointStream PointStream::jls(long L, long S) {
  require_ls_params(L, S);
  return {JlsKind{L, S}, Interval1D::unit()};
}

PointStream PointStream::iet_orbit(Iet map, QuadReal x0) {
  map.locate(x0);  // throws OutOfDomain
  Interval1D domain(QuadReal(0), map.total());
  return {IetOrbitKind{std::make_shared<const Iet>(std::move(map)), std::move(x0)}, std::move(domain)};
}

PointStream PointStream::restriction(PointStream inner, Interval1D sub, std::size_t scan_cap) {
  if (!inner.domain().contains(sub)) {
    throw Error(ErrorCode::InvalidParams, "restriction interval is not inside the stream's domain");
  }
  if (scan_cap == 0) throw Error(ErrorCode::InvalidParams, "scan cap must be positive");
  Interval1D domain = sub;
  return {RestrictionKind{std::make_shared<const PointStream>(std::move(inner)), std::move(sub), scan_cap},
          std::move(domain)};
}

std::unique_ptr<PointCursor> PointStream::cursor() const {
  return std::visit(
      Overloaded{
          [](const KroneckerKind& k) -> std::unique_ptr<PointCursor> {
            return std::make_unique<KroneckerCursor>(k.z);
          },
          [](const LsKind& k) -> std::unique_ptr<PointCursor> { return std::make_unique<LsCursor>(k.L, k.S); },
          [](const JlsKind& k) -> std::unique_ptr<PointCursor> { return std::make_unique<JlsCursor>(k.L, k.S); },
          [](const IetOrbitKind& k) -> std::unique_ptr<PointCursor> {
            return std::make_unique<OrbitCursor>(k.map, k.x0);
          },
          [](const RestrictionKind& k) -> std::unique_ptr<PointCursor> {
            return std::make_unique<RestrictionCursor>(k.inner->cursor(), k.sub, k.scan_cap);
          },
      },
      kind_);
}

std::vector<QuadReal> PointStream::take(std::size_t n) const {
  if (const auto* r = std::get_if<RestrictionKind>(&kind_)) {
    return restrict_stream(*r->inner, r->sub, n, r->scan_cap);
  }
  std::vector<QuadReal> out;
  out.reserve(n);
  auto c = cursor();
  for (std::size_t i = 0; i < n; ++i) out.push_back(c->next());
  return out;
}

std::string PointStream::descriptor_json() const {
  using nlohmann::json;
  json j;
  std::visit(Overloaded{
                 [&](const KroneckerKind& k) {
                   j["kind"] = "kronecker";
                   j["params"] = {{"z", k.z.str()}};
                 },
                 [&](const LsKind& k) {
                   j["kind"] = "ls";
                   j["params"] = {{"L", k.L}, {"S", k.S}};
                 },
                 [&](const JlsKind& k) {
                   j["kind"] = "jls";
                   j["params"] = {{"L", k.L}, {"S", k.S}};
                 },
                 [&](const IetOrbitKind& k) {
                   j["kind"] = "iet_orbit";
                   json lengths = json::array();
                   for (const auto& l : k.map->lengths()) lengths.push_back(l.str());
                   j["params"] = {{"pi0", k.map->combinatorics().pi0},
                                  {"pi1", k.map->combinatorics().pi1},
                                  {"lengths", lengths},
                                  {"x0", k.x0.str()}};
                 },
                 [&](const RestrictionKind& k) {
                   j["kind"] = "restriction";
                   j["params"] = {{"inner", json::parse(k.inner->descriptor_json())},
                                  {"scan_cap", k.scan_cap}};
                 },
             },
             kind_);
  j["domain"] = {domain_.left().str(), domain_.right().str()};
  return j.dump();
}

QuadReal kronecker_point(const QuadReal& z, std::uint64_t n) {
  return frac(QuadReal(Rational(Integer(static_cast<unsigned long>(n)))) * z);
}

LsCounts ls_counts(long L, long S, unsigned level) {
  require_ls_params(L, S);
  if (level < 1) throw Error(ErrorCode::InvalidParams, "level must be >= 1");
  LsCounts c{Integer(L), Integer(S)};
  for (unsigned n = 1; n < level; ++n) {
    Integer l = L * c.long_count + c.short_count;
    c.short_count = S * c.long_count;
    c.long_count = std::move(l);
  }
  return c;
}

LsPartition ls_partition(long L, long S, unsigned level) {
  require_ls_params(L, S);
  if (level < 1) throw Error(ErrorCode::InvalidParams, "level must be >= 1");
  const QuadReal b = beta(L, S);
  LsPartition part;
  part.L = L;
  part.S = S;
  part.level = level;
  part.intervals.push_back({QuadReal(0), true});  // level 0: [0, 1) itself
  QuadReal piece = b;                              // beta^n for the level being built
  for (unsigned n = 1; n <= level; ++n) {
    const QuadReal small_piece = piece * b;
    std::vector<LsInterval> next;
    next.reserve(part.intervals.size() * static_cast<std::size_t>(L + S));
    for (const auto& iv : part.intervals) {
      if (!iv.is_long) {
        next.push_back({iv.left, true});
        continue;
      }
      for (long i = 0; i < L; ++i) next.push_back({iv.left + QuadReal(i) * piece, true});
      for (long j = 0; j < S; ++j) {
        next.push_back({iv.left + QuadReal(L) * piece + QuadReal(j) * small_piece, false});
      }
    }
    part.intervals = std::move(next);
    piece = small_piece;
  }
  const LsCounts counts = ls_counts(L, S, level);
  part.long_count = counts.long_count;
  part.short_count = counts.short_count;
  return part;
}

std::vector<QuadReal> ls_points(long L, long S, std::size_t count) {
  require_ls_params(L, S);
  if (count < 1) throw Error(ErrorCode::InvalidParams, "count must be >= 1");
  return PointStream::ls(L, S).take(count);
}

QuadReal jls_point(long L, long S, std::uint64_t i) {
  require_ls_params(L, S);
  const QuadReal b = beta(L, S);
  const std::uint64_t k = i / static_cast<std::uint64_t>(S);
  const std::uint64_t rem = i - k * static_cast<std::uint64_t>(S);
  const QuadReal kk(Rational(Integer(static_cast<unsigned long>(k))));
  const QuadReal rr(static_cast<long>(rem));
  return frac(kk * b + rr * b * b);
}

std::vector<QuadReal> restrict_stream(const PointStream& inner, const Interval1D& sub, std::size_t count,
                                      std::size_t scan_cap) {
  if (!inner.domain().contains(sub)) {
    throw Error(ErrorCode::InvalidParams, "restriction interval is not inside the stream's domain");
  }
  if (count < 1) throw Error(ErrorCode::InvalidParams, "count must be >= 1");
  std::vector<QuadReal> out;
  out.reserve(count);
  auto c = inner.cursor();
  for (std::size_t scanned = 0; out.size() < count; ++scanned) {
    if (scanned == scan_cap) {
      throw Error(ErrorCode::BudgetExhausted, "found " + std::to_string(out.size()) + " of " +
                                                  std::to_string(count) + " points within " +
                                                  std::to_string(scan_cap) + " inner points");
    }
    QuadReal x = c->next();
    if (sub.contains(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace ietseq
