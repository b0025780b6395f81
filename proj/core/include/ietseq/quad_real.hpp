#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ietseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; throws DivisionByZero for den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Canonical "p/q" (denominator always printed).
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// The radicand is kept free of square factors, so two equal values always
/// have equal components. A value with b == 0 is rational and carries
/// radicand 0; it combines with a value over any radicand. Combining two
/// irrational values over different radicands throws RadicandMismatch.
///
/// Each value also carries a double approximation together with a bound on
/// its absolute error. Comparisons consult it first and only fall back to
/// exact arithmetic when the bound does not certify the answer.
class QuadReal {
 public:
  QuadReal();
  QuadReal(long value);  // NOLINT(google-explicit-constructor)
  QuadReal(const Rational& value);  // NOLINT(google-explicit-constructor)
  QuadReal(const Rational& a, const Rational& b, const Integer& radicand);

  /// sqrt(d) for d >= 0, with square factors pulled out of the radicand.
  static QuadReal sqrt(const Integer& d);

  /// Parses the serialized form `p/q + r/s*sqrt(D)`. Also accepts bare
  /// integers, `sqrt(D)` terms, any +/- chain of such terms, the keyword
  /// `golden` for (sqrt(5)-1)/2 and `beta(L,S)`.
  static QuadReal parse(std::string_view text);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_coeff() const noexcept { return b_; }
  const Integer& radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return d_ == 0; }
  bool is_integer() const;

  double approx() const noexcept { return approx_; }
  double approx_error() const noexcept { return err_; }

  int sign() const;
  QuadReal conjugate() const;
  /// a^2 - b^2 d; zero only for the zero element.
  Rational norm() const;
  QuadReal reciprocal() const;

  std::string str() const;

  QuadReal operator-() const;
  QuadReal& operator+=(const QuadReal& rhs);
  QuadReal& operator-=(const QuadReal& rhs);
  QuadReal& operator*=(const QuadReal& rhs);
  QuadReal& operator/=(const QuadReal& rhs);

  friend QuadReal operator+(QuadReal lhs, const QuadReal& rhs) { return lhs += rhs; }
  friend QuadReal operator-(QuadReal lhs, const QuadReal& rhs) { return lhs -= rhs; }
  friend QuadReal operator*(QuadReal lhs, const QuadReal& rhs) { return lhs *= rhs; }
  friend QuadReal operator/(QuadReal lhs, const QuadReal& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadReal& x, const QuadReal& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y);

 private:
  void normalize();
  void refresh_approx();

  Rational a_;
  Rational b_;
  Integer d_;
  double approx_ = 0.0;
  double err_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const QuadReal& x);

/// Throws RadicandMismatch unless x and y can share one field.
Integer common_radicand(const QuadReal& x, const QuadReal& y);

/// Unique integer n with n <= x < n + 1.
Integer floor(const QuadReal& x);
/// x - floor(x), in [0, 1).
QuadReal frac(const QuadReal& x);
QuadReal abs(const QuadReal& x);
QuadReal pow(const QuadReal& x, unsigned exponent);

/// Correctly rounded (half up) fixed-point rendering with `digits` decimals.
std::string to_decimal(const QuadReal& x, int digits);

/// Positive root of L*beta + S*beta^2 = 1, requires L, S >= 1.
QuadReal beta(long L, long S);
/// The golden section (sqrt(5) - 1) / 2.
QuadReal golden();

}  // namespace ietseq
