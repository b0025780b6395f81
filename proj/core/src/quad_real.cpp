#include "ietseq/quad_real.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "ietseq/error.hpp"

namespace ietseq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Absorbs underflow in get_d() and the products below.
constexpr double kTiny = 1e-290;

std::pair<Integer, Integer> split_square_factor(Integer d) {
  Integer outside = 1;
  // Trial division is plenty for the radicands this library meets
  // (L^2 + 4S and hand-typed literals); a leftover perfect square is
  // caught below.
  for (unsigned long p = 2; p <= 1000000UL; ++p) {
    const Integer sq = Integer(p) * p;
    if (sq > d) break;
    while (d % sq == 0) {
      d /= sq;
      outside *= p;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    outside *= root;
    d = 1;
  }
  return {outside, d};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuadReal parse() {
    skip_ws();
    QuadReal value = signed_term();
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      // "+ -3/2*sqrt(5)" is the serialized form of a negative coefficient.
      QuadReal term = signed_term();
      value = op == '+' ? value + term : value - term;
    }
    return value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string s(text_.substr(start, pos_ - start));
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s);
  }

  QuadReal atom() {
    skip_ws();
    if (consume("golden")) return golden();
    if (consume("sqrt")) {
      expect('(');
      Integer d = integer();
      expect(')');
      if (d < 0) fail("negative radicand");
      return QuadReal::sqrt(d);
    }
    if (consume("beta")) {
      expect('(');
      Integer L = integer();
      expect(',');
      Integer S = integer();
      expect(')');
      if (!L.fits_slong_p() || !S.fits_slong_p()) fail("beta parameters out of range");
      return beta(L.get_si(), S.get_si());
    }
    Integer num = integer();
    Integer den = 1;
    skip_ws();
    if (!at_end() && text_[pos_] == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    return QuadReal(make_rational(num, den));
  }

  QuadReal signed_term() {
    skip_ws();
    bool negate = false;
    if (!at_end() && text_[pos_] == '-' &&
        (pos_ + 1 >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) == 0)) {
      negate = true;
      ++pos_;
    }
    QuadReal value = atom();
    while (true) {
      skip_ws();
      if (at_end() || text_[pos_] != '*') break;
      ++pos_;
      value *= atom();
    }
    return negate ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  QuadReal q = QuadReal::parse(text);
  if (!q.is_rational()) {
    throw Error(ErrorCode::ParseError, "expected a rational literal, got '" + std::string(text) + "'");
  }
  return q.rational_part();
}

QuadReal::QuadReal() { refresh_approx(); }

QuadReal::QuadReal(long value) : a_(value) { refresh_approx(); }

QuadReal::QuadReal(const Rational& value) : a_(value) { refresh_approx(); }

QuadReal::QuadReal(const Rational& a, const Rational& b, const Integer& radicand) : a_(a), b_(b) {
  if (radicand < 0) throw Error(ErrorCode::InvalidParams, "negative radicand");
  if (b_ != 0) {
    auto [outside, inside] = split_square_factor(radicand);
    if (inside == 1) {
      a_ += b_ * outside;
      b_ = 0;
    } else {
      b_ *= outside;
      d_ = inside;
    }
  }
  normalize();
  refresh_approx();
}

QuadReal QuadReal::sqrt(const Integer& d) { return QuadReal(0, 1, d); }

QuadReal QuadReal::parse(std::string_view text) { return Parser(text).parse(); }

bool QuadReal::is_integer() const { return d_ == 0 && a_.get_den() == 1; }

void QuadReal::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) d_ = 0;
}

void QuadReal::refresh_approx() {
  const double a = a_.get_d();
  if (d_ == 0) {
    approx_ = a;
    err_ = std::abs(a) * 2 * kEps + kTiny;
    return;
  }
  const double b = b_.get_d();
  const double s = std::sqrt(d_.get_d());
  approx_ = a + b * s;
  err_ = (std::abs(a) + std::abs(b) * s) * 8 * kEps + kTiny;
}

int QuadReal::sign() const {
  if (std::abs(approx_) > err_) return approx_ > 0 ? 1 : -1;
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

QuadReal QuadReal::conjugate() const {
  QuadReal out = *this;
  out.b_ = -out.b_;
  out.refresh_approx();
  return out;
}

Rational QuadReal::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadReal QuadReal::reciprocal() const {
  QuadReal one(1);
  return one /= *this;
}

std::string QuadReal::str() const {
  if (d_ == 0) return to_string(a_);
  return to_string(a_) + " + " + to_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

QuadReal QuadReal::operator-() const {
  QuadReal out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  out.approx_ = -out.approx_;
  return out;
}

Integer common_radicand(const QuadReal& x, const QuadReal& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw Error(ErrorCode::RadicandMismatch,
              "sqrt(" + x.radicand().get_str() + ") vs sqrt(" + y.radicand().get_str() + ")");
}

QuadReal& QuadReal::operator+=(const QuadReal& rhs) {
  d_ = common_radicand(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  refresh_approx();
  return *this;
}

QuadReal& QuadReal::operator-=(const QuadReal& rhs) {
  d_ = common_radicand(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  refresh_approx();
  return *this;
}

QuadReal& QuadReal::operator*=(const QuadReal& rhs) {
  const Integer d = common_radicand(*this, rhs);
  if (rhs.d_ == 0) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
  } else if (d_ == 0) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
  } else {
    Rational na = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
    Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  d_ = d;
  normalize();
  refresh_approx();
  return *this;
}

QuadReal& QuadReal::operator/=(const QuadReal& rhs) {
  if (rhs.a_ == 0 && rhs.b_ == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (rhs.d_ == 0) {
    common_radicand(*this, rhs);
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    normalize();
    refresh_approx();
    return *this;
  }
  const Rational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  refresh_approx();
  return *this;
}

std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) {
  const double diff = x.approx_ - y.approx_;
  const double bound = x.err_ + y.err_ + (std::abs(x.approx_) + std::abs(y.approx_)) * 2 * kEps;
  if (std::abs(diff) > bound) return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QuadReal& x) { return os << x.str(); }

Integer floor(const QuadReal& x) {
  if (x.is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.rational_part().get_num_mpz_t(), x.rational_part().get_den_mpz_t());
    return q;
  }
  const double v = x.approx();
  const double e = x.approx_error();
  if (std::isfinite(v) && std::abs(v) < 1e15 && e < 0.25) {
    const double f = std::floor(v);
    if (v - e >= f && v + e < f + 1) return Integer(f);
  }
  // Write x = (A + B*sqrt(d)) / Q with integers, Q > 0. With
  // s = isqrt(B^2 d), B*sqrt(d) lies strictly inside (s, s+1) for B > 0 and
  // (-s-1, -s) for B < 0, since d is not a square. So floor(x*Q) is known
  // exactly and floor(x) = floor(floor(x*Q) / Q).
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_coeff();
  Integer q;
  mpz_lcm(q.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const Integer big_a = a.get_num() * (q / a.get_den());
  const Integer big_b = b.get_num() * (q / b.get_den());
  const Integer radicand = big_b * big_b * x.radicand();
  Integer s;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  const Integer scaled_floor = big_b > 0 ? Integer(big_a + s) : Integer(big_a - s - 1);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), scaled_floor.get_mpz_t(), q.get_mpz_t());
  return out;
}

QuadReal frac(const QuadReal& x) { return x - QuadReal(Rational(floor(x))); }

QuadReal abs(const QuadReal& x) { return x.sign() < 0 ? -x : x; }

QuadReal pow(const QuadReal& x, unsigned exponent) {
  QuadReal result(1);
  QuadReal base = x;
  while (exponent > 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string to_decimal(const QuadReal& x, int digits) {
  if (digits < 0) throw Error(ErrorCode::InvalidParams, "negative decimal precision");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer n = floor(x * QuadReal(Rational(scale)) + QuadReal(Rational(1, 2)));
  std::string body = Integer(abs(n)).get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  return n < 0 ? "-" + body : body;
}

QuadReal beta(long L, long S) {
  if (L < 1 || S < 1) {
    throw Error(ErrorCode::InvalidParams,
                "beta needs L >= 1 and S >= 1, got L=" + std::to_string(L) + " S=" + std::to_string(S));
  }
  const Integer l(L);
  const Integer s(S);
  const Rational inv = make_rational(1, 2 * s);
  return QuadReal(Rational(-l) * inv, inv, l * l + 4 * s);
}

QuadReal golden() { return QuadReal(Rational(-1, 2), Rational(1, 2), 5); }

}  // namespace ietseq
