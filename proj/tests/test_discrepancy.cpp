#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ietseq/discrepancy.hpp"
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

std::vector<QuadReal> random_points(std::mt19937_64& rng, std::size_t n, long den_max) {
  std::vector<QuadReal> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const long den = std::uniform_int_distribution<long>(1, den_max)(rng);
    pts.push_back(r(std::uniform_int_distribution<long>(0, den - 1)(rng), den));
  }
  return pts;
}

// Extreme discrepancy by enumerating boxes whose ends sit at a point or at 0/1,
// each end open or closed. Cubic; for tiny inputs.
QuadReal brute_extreme(const std::vector<QuadReal>& pts) {
  std::vector<QuadReal> ends(pts.begin(), pts.end());
  ends.push_back(r(0));
  ends.push_back(r(1));
  const QuadReal N(static_cast<long>(pts.size()));
  QuadReal best(0);
  for (const auto& a : ends) {
    for (const auto& b : ends) {
      if (b < a) continue;
      for (int lc = 0; lc < 2; ++lc) {
        for (int rc = 0; rc < 2; ++rc) {
          long cnt = 0;
          for (const auto& x : pts) {
            const bool lo = lc ? a <= x : a < x;
            const bool hi = rc ? x <= b : x < b;
            if (lo && hi) ++cnt;
          }
          const QuadReal err = abs(QuadReal(cnt) / N - (b - a));
          if (best < err) best = err;
        }
      }
    }
  }
  return best;
}
}  // namespace

TEST_CASE("star discrepancy examples") {
  std::vector<QuadReal> one{r(1, 2)};
  CHECK(star_disc_unit(one).value == r(1, 2));
  for (long n = 1; n <= 20; ++n) {
    std::vector<QuadReal> c;
    for (long i = 1; i <= n; ++i) c.push_back(r(2 * i - 1, 2 * n));
    CHECK(star_disc_unit(c).value == r(1, 2 * n));
    CHECK(extreme_disc_unit(c).value == r(1, n));
  }
  std::vector<QuadReal> zero{r(0)};
  CHECK(brute_force_star(zero).value == r(1));
  CHECK(star_disc_unit(zero).value == r(1));
  std::vector<QuadReal> two{r(0), r(1, 2)};
  CHECK(brute_force_star(two).value == r(1, 2));
  CHECK(extreme_disc_unit(one).value == r(1));

  const auto g = PointStream::kronecker(golden()).take(13);
  CHECK(star_disc_unit(g).value == brute_force_star(g).value);
}

TEST_CASE("errors") {
  std::vector<QuadReal> none;
  CHECK(throws_code(ErrorCode::EmptyInput, [&] { star_disc_unit(none); }));
  CHECK(throws_code(ErrorCode::EmptyInput, [&] { brute_force_star(none); }));
  std::vector<QuadReal> out{r(1)};
  CHECK(throws_code(ErrorCode::OutOfDomain, [&] { star_disc_unit(out); }));
  CHECK(throws_code(ErrorCode::OutOfDomain, [&] { extreme_disc_unit(out); }));
  CHECK(throws_code(ErrorCode::OutOfDomain, [&] { star_disc_interval(out, Interval1D(r(0), r(1))); }));
  std::vector<std::vector<QuadReal>> two_d{{r(0), r(0)}};
  CHECK(throws_code(ErrorCode::Unsupported, [&] { star_disc(two_d); }));
  std::vector<std::vector<QuadReal>> one_d{{r(1, 2)}};
  CHECK(star_disc(one_d).value == r(1, 2));
}

TEST_CASE("oracle equivalence, range and sandwich on random sets") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const auto pts = random_points(rng, std::uniform_int_distribution<std::size_t>(1, 60)(rng), 50);
    const DiscrepancyResult s = star_disc_unit(pts);
    const DiscrepancyResult b = brute_force_star(pts);
    CHECK(s.value == b.value);
    CHECK(s.value.sign() > 0);
    CHECK(s.value <= r(1));
    const QuadReal d = extreme_disc_unit(pts).value;
    CHECK(s.value <= d);
    CHECK(d <= r(2) * s.value);
  }
}

TEST_CASE("extreme discrepancy against box enumeration") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const auto pts = random_points(rng, std::uniform_int_distribution<std::size_t>(1, 9)(rng), 12);
    CHECK(extreme_disc_unit(pts).value == brute_extreme(pts));
  }
  const auto g = PointStream::kronecker(golden()).take(15);
  CHECK(extreme_disc_unit(g).value == brute_extreme(g));
}

TEST_CASE("argmax boxes realize the value") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto pts = random_points(rng, std::uniform_int_distribution<std::size_t>(1, 30)(rng), 40);
    for (const DiscrepancyResult& res : {star_disc_unit(pts), extreme_disc_unit(pts)}) {
      const auto& bx = res.box;
      long cnt = 0;
      for (const auto& x : pts) {
        const bool lo = bx.left_limit ? bx.left < x : bx.left <= x;
        const bool hi = bx.right_limit ? x <= bx.right : x < bx.right;
        if (lo && hi) ++cnt;
      }
      const QuadReal err = abs(QuadReal(cnt) / QuadReal(static_cast<long>(pts.size())) - (bx.right - bx.left));
      CHECK(err == res.value);
    }
  }
}

TEST_CASE("scaling law") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const QuadReal a = r(static_cast<long>(rng() % 21) - 10, 7);
    const QuadReal len = r(1 + static_cast<long>(rng() % 30), 11) + golden() * r(static_cast<long>(rng() % 3));
    const Interval1D I(a, a + len);
    std::vector<QuadReal> pts;
    std::vector<QuadReal> scaled;
    for (const auto& u : random_points(rng, 1 + rng() % 25, 30)) {
      pts.push_back(a + u * len);
      scaled.push_back(u);
    }
    const QuadReal v = star_disc_interval(pts, I).value;
    CHECK(v == star_disc_unit(scaled).value);
    const QuadReal c = r(static_cast<long>(rng() % 9), 4);
    std::vector<QuadReal> moved;
    for (const auto& x : pts) moved.push_back(x + c);
    CHECK(star_disc_interval(moved, Interval1D(a + c, a + len + c)).value == v);
  }
  const auto g = PointStream::kronecker(golden()).take(50);
  CHECK(star_disc_interval(g, Interval1D::unit()).value == star_disc_unit(g).value);
}

TEST_CASE("adding the most lacking point changes N D* by at most 1") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    auto pts = random_points(rng, 1 + rng() % 30, 40);
    const DiscrepancyResult d = star_disc_unit(pts);
    const QuadReal before = d.value * QuadReal(static_cast<long>(pts.size()));
    // A point just inside the argmax box (its left end is 0).
    pts.push_back(r(0));
    const QuadReal after = star_disc_unit(pts).value * QuadReal(static_cast<long>(pts.size()));
    CHECK(abs(after - before) <= r(1));
  }
}

TEST_CASE("curves") {
  const auto k = PointStream::kronecker(golden());
  const DiscrepancyCurve one = curve(k, 1, 1);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].n == 1);
  CHECK(one.entries[0].dstar == r(1));

  const DiscrepancyCurve c = curve(k, 300, 7);
  CHECK(c.entries.size() == 42);
  const auto pts = k.take(300);
  for (const auto& e : c.entries) {
    CHECK(e.n % 7 == 0);
    const DiscrepancyResult d = star_disc_unit(std::span<const QuadReal>(pts.data(), e.n));
    CHECK(e.dstar == d.value);
    CHECK(e.box.right == d.box.right);
  }
  // Non-unit domain: the curve is computed on the rescaled points.
  const auto half = PointStream::restriction(k, Interval1D(r(0), r(1, 2)));
  const auto hp = half.take(40);
  const DiscrepancyCurve hc = curve(half, 40, 1);
  CHECK(hc.entries.back().dstar == star_disc_interval(hp, half.domain()).value);
  CHECK(throws_code(ErrorCode::InvalidParams, [&] { curve(k, 3, 5); }));
}

TEST_CASE("bound monitor") {
  const DiscrepancyCurve c = curve(PointStream::kronecker(golden()), 2000, 1);
  const BoundReport rep = bound_monitor(c);
  CHECK(rep.schmidt_ok);
  CHECK(rep.low_discrepancy_consistent);
  for (const auto& b : rep.blocks) {
    CHECK(b.max >= 0.06);
    CHECK(rep.c_up >= b.max);
  }
  CHECK(rep.blocks.size() == 10);  // j = 1..10
  for (const auto& e : c.entries) {
    if (e.n >= 2) CHECK(e.dstar.approx() <= rep.c_up * std::log(static_cast<double>(e.n)) / static_cast<double>(e.n) + 1e-15);
  }

  std::vector<QuadReal> constant(2000, r(1, 3));
  const DiscrepancyCurve bad = curve_from_points(constant, Interval1D::unit(), 1, "constant");
  const BoundReport br = bound_monitor(bad);
  CHECK_FALSE(br.low_discrepancy_consistent);
  CHECK(br.c_up > 100);

  std::vector<QuadReal> three{r(0), r(1, 2), r(1, 4)};
  CHECK(throws_code(ErrorCode::InsufficientData,
                    [&] { bound_monitor(curve_from_points(three, Interval1D::unit(), 1, "x")); }));
  const std::string j = to_json(rep);
  CHECK(j.find("\"verdict\": \"consistent\"") != std::string::npos);
  CHECK(j.find("\"C_up\"") != std::string::npos);
}

TEST_CASE("curve CSV round trip") {
  const DiscrepancyCurve c = curve(PointStream::ls(1, 1), 50, 5);
  const std::string csv = curve_csv(c, 15);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "N,Dstar,scaled");
  std::size_t i = 0;
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    CHECK(std::stoul(line.substr(0, a)) == c.entries[i].n);
    CHECK(line.substr(a + 1, b - a - 1) == to_decimal(c.entries[i].dstar, 15));
    CHECK(std::abs(std::stod(line.substr(a + 1, b - a - 1)) - c.entries[i].dstar.approx()) < 1e-14);
    ++i;
  }
  CHECK(i == c.entries.size());
}
