#include <doctest.h>

#include <random>

#include "ietseq/continued_fraction.hpp"
#include "ietseq/error.hpp"
#include "ietseq/quad_real.hpp"

using namespace ietseq;

namespace {
QuadReal q(const char* s) { return QuadReal::parse(s); }
QuadReal r(long p, long d = 1) { return QuadReal(make_rational(p, d)); }

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}
}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(throws_code(ErrorCode::DivisionByZero, [] { make_rational(1, 0); }));
}

TEST_CASE("arithmetic") {
  const QuadReal s5 = QuadReal::sqrt(5);
  CHECK(s5 * s5 == r(5));
  CHECK((s5 * s5).is_rational());
  const QuadReal b11 = beta(1, 1);
  CHECK(b11 * b11 + b11 == r(1));
  const QuadReal b22 = beta(2, 2);
  CHECK(r(2) * b22 + r(2) * b22 * b22 == r(1));
  CHECK(throws_code(ErrorCode::RadicandMismatch, [] { return QuadReal::sqrt(2) + QuadReal::sqrt(3); }));
  CHECK(throws_code(ErrorCode::DivisionByZero, [] { return r(1) / r(0); }));
  CHECK(q("1/2 + 1/2*sqrt(5)") / q("1/2 + 1/2*sqrt(5)") == r(1));
  CHECK(QuadReal::sqrt(12) == r(2) * QuadReal::sqrt(3));
  CHECK(QuadReal::sqrt(16) == r(4));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  auto rnd = [&] { return QuadReal(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), 7); };
  for (int i = 0; i < 200; ++i) {
    const QuadReal x = rnd(), y = rnd(), z = rnd();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    if (y.sign() != 0) CHECK((x / y) * y == x);
    CHECK(x - x == r(0));
  }
}

TEST_CASE("compare") {
  const QuadReal b11 = beta(1, 1);
  const QuadReal b22 = beta(2, 2);
  CHECK(b11 < r(1));
  CHECK(b22 > b22 * b22 + b22 * b22);
  CHECK((b11 <=> b11) == std::strong_ordering::equal);
  // Values closer than double resolution.
  const QuadReal a = q("sqrt(2)");
  const QuadReal c = QuadReal(make_rational(Integer("14142135623730950488016887"), Integer("10000000000000000000000000")));
  CHECK(c < a);
  CHECK(a - c < QuadReal(make_rational(1, Integer("1000000000000000000000000"))));
}

TEST_CASE("floor and frac") {
  const QuadReal b11 = beta(1, 1);
  CHECK(floor(b11) == 0);
  CHECK(floor(q("3 + 2*sqrt(5)")) == 7);
  CHECK(floor(-b11) == -1);
  CHECK(frac(r(2) * b11) == r(2) * b11 - r(1));
  CHECK(frac(r(0)) == r(0));
  CHECK(frac(-beta(2, 2)) == r(1) - beta(2, 2));
  CHECK(floor(r(-7, 2)) == -4);
  // Large values take the exact path.
  const QuadReal big = q("sqrt(5)") * r(1000000000000000000L);
  CHECK(floor(big) == Integer("2236067977499789696"));
  CHECK(floor(-big) == Integer("-2236067977499789697"));
}

TEST_CASE("frac is in [0,1) and differs from x by an integer") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (int i = 0; i < 300; ++i) {
    const QuadReal x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), 13);
    const QuadReal f = frac(x);
    CHECK(f.sign() >= 0);
    CHECK(f < r(1));
    CHECK((x - f).is_integer());
  }
}

TEST_CASE("beta") {
  CHECK(beta(1, 1) == q("-1/2 + 1/2*sqrt(5)"));
  CHECK(beta(2, 2) == q("-1/2 + 1/2*sqrt(3)"));
  CHECK(beta(3, 2) == q("-3/4 + 1/4*sqrt(17)"));
  CHECK(beta(1, 2) == r(1, 2));
  for (long L = 1; L <= 10; ++L) {
    for (long S = 1; S <= 10; ++S) {
      const QuadReal b = beta(L, S);
      CHECK(r(L) * b + r(S) * b * b == r(1));
      CHECK(b.sign() > 0);
      CHECK(b < r(1));
    }
  }
  CHECK(throws_code(ErrorCode::InvalidParams, [] { beta(0, 1); }));
  CHECK(throws_code(ErrorCode::InvalidParams, [] { beta(1, 0); }));
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"0/1", "-3/2", "1/2 + 1/2*sqrt(5)", "-7/3 + -2/9*sqrt(11)"}) {
    const QuadReal x = q(s);
    CHECK(QuadReal::parse(x.str()) == x);
  }
  CHECK(q("golden") == golden());
  CHECK(q("beta(3,2)") == beta(3, 2));
  CHECK(q("2 - sqrt(5)") == r(2) - QuadReal::sqrt(5));
  CHECK(throws_code(ErrorCode::ParseError, [] { q("1/2 +"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { q("abc"); }));
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(r(1, 2), 3) == "0.500");
  CHECK(to_decimal(r(2, 3), 4) == "0.6667");
  CHECK(to_decimal(r(-2, 3), 4) == "-0.6667");
  CHECK(to_decimal(golden(), 12) == "0.618033988750");
  CHECK(to_decimal(r(1, 8), 2) == "0.13");
}

TEST_CASE("continued fractions") {
  const ContinuedFraction g = cf_expand(beta(1, 1), 10);
  CHECK(g.str() == "[0; (1)]");
  const ContinuedFraction b = cf_expand(beta(2, 2), 10);
  CHECK(b.str() == "[0; (2,1)]");
  const ContinuedFraction t = cf_expand(r(3, 7), 10);
  CHECK(t.terminated);
  CHECK(t.str() == "[0; 2,3]");
  const ContinuedFraction s2 = cf_expand(QuadReal::sqrt(2), 10);
  CHECK(s2.str() == "[1; (2)]");
  const ContinuedFraction s7 = cf_expand(QuadReal::sqrt(7), 10);
  CHECK(s7.str() == "[2; (1,1,1,4)]");
  const ContinuedFraction neg = cf_expand(-golden(), 10);
  CHECK(neg.a0 == -1);
  CHECK(neg.periodic());
}

TEST_CASE("convergents approximate the input") {
  for (const QuadReal& x : {golden(), beta(3, 2), QuadReal::sqrt(7), beta(5, 3)}) {
    const ContinuedFraction cf = cf_expand(x, 64);
    // q_{-1} = 0, q_0 = 1, q_k = a_k q_{k-1} + q_{k-2}; |x - p_k/q_k| <= 1/(q_k q_{k+1}).
    std::vector<Integer> qs{0, 1};
    for (std::size_t k = 1; k <= 14; ++k) qs.push_back(cf.partial_quotient(k) * qs[k] + qs[k - 1]);
    for (std::size_t k = 0; k <= 12; ++k) {
      const Rational c = convergent(cf, k);
      CHECK(c.get_den() == qs[k + 1]);
      CHECK(abs(x - QuadReal(c)) <= QuadReal(make_rational(1, qs[k + 1] * qs[k + 2])));
    }
  }
}

TEST_CASE("moving averages") {
  const MovingAverageReport g = moving_average(cf_expand(golden(), 10), 20);
  CHECK(g.limit == Rational(1));
  CHECK(g.supremum_observed == Rational(1));
  CHECK(g.bounded);
  const MovingAverageReport b = moving_average(cf_expand(beta(2, 2), 10), 6);
  CHECK(*b.limit == make_rational(3, 2));
  CHECK(b.values[0] == Rational(2));
  CHECK(b.values[1] == make_rational(3, 2));
  CHECK(b.values[2] == make_rational(5, 3));
  CHECK(b.bounded);
  CHECK(throws_code(ErrorCode::RationalInput, [] { moving_average(cf_expand(QuadReal(make_rational(3, 7)), 10), 4); }));
  for (long L = 1; L <= 8; ++L) {
    for (long S = 1; S <= 8; ++S) {
      const QuadReal x = beta(L, S);
      if (x.is_rational()) continue;
      const ContinuedFraction cf = cf_expand(x, 256);
      CHECK(cf.periodic());
      CHECK(moving_average(cf, 32).bounded);
    }
  }
}
