#include <doctest.h>

#include <algorithm>
#include <set>

#include "ietseq/constructions.hpp"
#include "ietseq/error.hpp"
#include "ietseq/sequences.hpp"

using namespace ietseq;

namespace {
QuadReal r(long p, long d = 1) { return QuadReal(make_rational(p, d)); }

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::vector<QuadReal> sorted(std::vector<QuadReal> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("intervals") {
  const Interval1D I(r(1, 4), r(3, 4));
  CHECK(I.contains(r(1, 4)));
  CHECK_FALSE(I.contains(r(3, 4)));
  CHECK(I.to_unit(r(1, 2)) == r(1, 2));
  CHECK(I.intersect(Interval1D(r(1, 2), r(1)))->left() == r(1, 2));
  CHECK_FALSE(I.intersect(Interval1D(r(3, 4), r(1))));
  CHECK(throws_code(ErrorCode::InvalidParams, [] { Interval1D(r(1), r(1)); }));
}

TEST_CASE("kronecker") {
  const QuadReal g = golden();
  CHECK(kronecker_point(g, 0) == r(0));
  CHECK(kronecker_point(g, 2) == r(2) * g - r(1));
  CHECK(kronecker_point(r(1, 3), 5) == r(2, 3));
  CHECK(PointStream::kronecker(g).take(1) == std::vector<QuadReal>{r(0)});
  const auto pts = PointStream::kronecker(g).take(500);
  for (std::size_t n = 0; n < pts.size(); ++n) CHECK(pts[n] == kronecker_point(g, n));
}

TEST_CASE("LS partitions") {
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(ls_partition(1, 1, n).total_count() == std::vector<int>{2, 3, 5, 8}[n - 1]);
  }
  const QuadReal b = beta(2, 2);
  const LsPartition p = ls_partition(2, 2, 1);
  REQUIRE(p.intervals.size() == 4);
  CHECK(p.intervals[0].left == r(0));
  CHECK(p.intervals[1].left == b);
  CHECK(p.intervals[2].left == r(2) * b);
  CHECK(p.intervals[3].left == r(2) * b + b * b);
  CHECK(p.intervals[0].is_long);
  CHECK_FALSE(p.intervals[3].is_long);

  for (long L = 1; L <= 3; ++L) {
    for (long S = 1; S <= 3; ++S) {
      const QuadReal bb = beta(L, S);
      for (unsigned n = 1; n <= 5; ++n) {
        const LsPartition part = ls_partition(L, S, n);
        const QuadReal lng = pow(bb, n);
        const QuadReal sht = lng * bb;
        QuadReal at(0);
        Integer nl = 0;
        Integer ns = 0;
        for (const auto& iv : part.intervals) {
          CHECK(iv.left == at);
          at += iv.is_long ? lng : sht;
          (iv.is_long ? nl : ns) += 1;
        }
        CHECK(at == r(1));
        CHECK(nl == part.long_count);
        CHECK(ns == part.short_count);
      }
    }
  }
}

TEST_CASE("LS counts") {
  for (long L = 1; L <= 5; ++L) {
    for (long S = 1; S <= 5; ++S) {
      const QuadReal b = beta(L, S);
      for (unsigned n = 1; n < 20; ++n) {
        const LsCounts c = ls_counts(L, S, n);
        const LsCounts d = ls_counts(L, S, n + 1);
        CHECK(d.long_count == L * c.long_count + c.short_count);
        CHECK(d.short_count == S * c.long_count);
        if (n <= 12) {
          CHECK(QuadReal(Rational(c.long_count)) * pow(b, n) + QuadReal(Rational(c.short_count)) * pow(b, n + 1) ==
                r(1));
        }
      }
    }
  }
  CHECK(throws_code(ErrorCode::InvalidParams, [] { ls_counts(1, 1, 0); }));
}

TEST_CASE("LS points") {
  const QuadReal b = beta(1, 1);
  auto p = [&](unsigned k) { return pow(b, k); };
  CHECK(ls_points(1, 1, 8) ==
        std::vector<QuadReal>{r(0), b, p(2), p(3), b + p(3), p(4), b + p(4), p(2) + p(4)});
  CHECK(ls_points(1, 1, 3) == std::vector<QuadReal>{r(0), b, p(2)});
  for (long L = 1; L <= 3; ++L) {
    for (long S = 1; S <= 3; ++S) {
      for (unsigned n = 1; n <= 6; ++n) {
        const LsPartition part = ls_partition(L, S, n);
        const std::size_t t = part.total_count().get_ui();
        std::vector<QuadReal> lefts;
        for (const auto& iv : part.intervals) lefts.push_back(iv.left);
        CAPTURE(L);
        CAPTURE(S);
        CAPTURE(n);
        CHECK(sorted(ls_points(L, S, t)) == lefts);
      }
    }
  }
  // Prefix property: longer requests extend shorter ones.
  const auto a = ls_points(2, 3, 40);
  const auto c = ls_points(2, 3, 17);
  CHECK(std::equal(c.begin(), c.end(), a.begin()));
  CHECK(PointStream::ls(2, 3).take(40) == a);
}

TEST_CASE("JLS points") {
  const QuadReal b = beta(2, 2);
  const QuadReal b2 = b * b;
  CHECK(jls_point(2, 2, 0) == r(0));
  CHECK(jls_point(2, 2, 1) == b2);
  CHECK(jls_point(2, 2, 2) == b);
  CHECK(jls_point(2, 2, 3) == frac(b + b2));
  CHECK(PointStream::jls(2, 2).take(4) == std::vector<QuadReal>{r(0), b2, b, frac(b + b2)});
  const QuadReal g = beta(1, 1);
  for (std::uint64_t i = 0; i < 30; ++i) CHECK(jls_point(1, 1, i) == kronecker_point(g, i));
  const auto first = PointStream::jls(2, 2).take(50);
  CHECK(std::set<QuadReal>(first.begin(), first.end()).size() == 50);
}

TEST_CASE("JLS enumeration covers {m beta + n beta^2} for m >= 0") {
  for (auto [L, S] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {1, 3}}) {
    const QuadReal b = beta(L, S);
    const auto pts = PointStream::jls(L, S).take(static_cast<std::size_t>(S * 11));
    const std::set<QuadReal> have(pts.begin(), pts.end());
    for (long m = 0; m <= 10; ++m) {
      for (long n = 0; n < S; ++n) CHECK(have.count(frac(r(m) * b + r(n) * b * b)) == 1);
    }
    for (const auto& x : pts) CHECK(jls_coordinates(L, S, x));
  }
}

TEST_CASE("restriction") {
  const QuadReal g = golden();
  const auto k = PointStream::kronecker(g);
  const auto half = restrict_stream(k, Interval1D(r(0), r(1, 2)), 3);
  CHECK(half == std::vector<QuadReal>{r(0), r(2) * g - r(1), r(4) * g - r(2)});
  CHECK(restrict_stream(k, k.domain(), 20) == k.take(20));

  // Twice restricted equals restricted to the intersection.
  const auto outer = PointStream::restriction(k, Interval1D(r(1, 5), r(4, 5)));
  const auto twice = PointStream::restriction(outer, Interval1D(r(1, 3), r(4, 5)));
  CHECK(twice.take(60) == restrict_stream(k, Interval1D(r(1, 3), r(4, 5)), 60));
  CHECK(throws_code(ErrorCode::InvalidParams, [&] { PointStream::restriction(k, Interval1D(r(1, 2), r(2))); }));
  CHECK(throws_code(ErrorCode::BudgetExhausted,
                    [&] { restrict_stream(PointStream::kronecker(r(1, 2)), Interval1D(r(1, 4), r(1, 3)), 1, 1000); }));
}

TEST_CASE("rotation restricted to [0, lambda*) is the n = 3 orbit") {
  const N3Lengths l = n3_from_gamma(golden(), r(7, 16));
  const QuadReal total = r(1) + l.b;
  const QuadReal angle = l.b + l.c;
  Iet rot = Iet::build(CombinatorialData::identity_top({2, 1}), {total - angle, angle});
  const auto rs = PointStream::iet_orbit(std::move(rot), r(0));
  const auto restricted = PointStream::restriction(rs, Interval1D(r(0), r(1)));
  const auto n3 = PointStream::iet_orbit(n3_standard(l.a, l.b, l.c), r(0));
  CHECK(restricted.take(300) == n3.take(300));
}

TEST_CASE("orbit streams and domains") {
  const Iet f = fls(2, 2);
  const QuadReal x0 = fls_start(2, 2, 0).x0;
  const auto s = PointStream::iet_orbit(f, x0);
  CHECK(s.take(3) == orbit(f, x0, 0, 2).points);
  const auto n3 = PointStream::iet_orbit(n3_standard(r(1, 2), r(1, 3), r(1, 2)), r(0));
  CHECK(n3.domain() == Interval1D(r(0), r(4, 3)));
  std::vector<PointStream> all{PointStream::kronecker(golden()), PointStream::ls(2, 1), PointStream::jls(3, 2), s, n3,
                               PointStream::restriction(n3, Interval1D(r(1, 3), r(1)))};
  for (const auto& st : all) {
    for (const auto& x : st.take(300)) CHECK(st.domain().contains(x));
  }
  const std::string d = PointStream::kronecker(golden()).descriptor_json();
  CHECK(d.find("\"kind\":\"kronecker\"") != std::string::npos);
  CHECK(d.find("-1/2 + 1/2*sqrt(5)") != std::string::npos);
}

TEST_CASE("cursors replay the same sequence") {
  const auto s = PointStream::ls(2, 2);
  auto c1 = s.cursor();
  auto c2 = s.cursor();
  for (int i = 0; i < 30; ++i) CHECK(c1->next() == c2->next());
}
