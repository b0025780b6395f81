#include "ietseq/continued_fraction.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "ietseq/error.hpp"

namespace ietseq {

std::optional<std::size_t> ContinuedFraction::known_terms() const {
  if (periodic()) return std::nullopt;
  return preperiod.size();
}

const Integer& ContinuedFraction::partial_quotient(std::size_t j) const {
  if (j == 0) throw Error(ErrorCode::InvalidParams, "partial quotients are indexed from 1");
  if (j <= preperiod.size()) return preperiod[j - 1];
  if (!periodic()) {
    throw Error(ErrorCode::InvalidParams, "partial quotient a_" + std::to_string(j) + " was not computed");
  }
  return period[(j - 1 - preperiod.size()) % period.size()];
}

std::string ContinuedFraction::str() const {
  std::ostringstream os;
  os << '[' << a0.get_str() << ';';
  for (std::size_t i = 0; i < preperiod.size(); ++i) {
    os << (i == 0 ? " " : ",") << preperiod[i].get_str();
  }
  if (periodic()) {
    os << (preperiod.empty() ? " (" : ", (");
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i != 0) os << ',';
      os << period[i].get_str();
    }
    os << ')';
  } else if (!terminated) {
    os << (preperiod.empty() ? " ..." : ", ...");
  }
  os << ']';
  return os.str();
}

ContinuedFraction cf_expand(const QuadReal& x, std::size_t max_terms) {
  if (max_terms < 1) throw Error(ErrorCode::InvalidParams, "max_terms must be >= 1");
  ContinuedFraction cf;
  cf.a0 = floor(x);
  QuadReal rest = x - QuadReal(Rational(cf.a0));

  // Remainder (a, b) -> index of the partial quotient it produced. The
  // radicand is fixed for the whole expansion.
  std::map<std::pair<Rational, Rational>, std::size_t> seen;
  std::vector<Integer> quotients;
  while (true) {
    if (rest.sign() == 0) {
      cf.terminated = true;
      break;
    }
    QuadReal next = rest.reciprocal();
    auto key = std::make_pair(next.rational_part(), next.radical_coeff());
    if (auto it = seen.find(key); it != seen.end()) {
      cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(it->second));
      cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(it->second), quotients.end());
      return cf;
    }
    if (quotients.size() == max_terms) break;
    seen.emplace(std::move(key), quotients.size());
    Integer a = floor(next);
    rest = next - QuadReal(Rational(a));
    quotients.push_back(std::move(a));
  }
  cf.preperiod = std::move(quotients);
  return cf;
}

Rational convergent(const ContinuedFraction& cf, std::size_t k) {
  // Fold from the inside: a_k, a_{k-1} + 1/a_k, ...
  if (k == 0) return Rational(cf.a0);
  Rational value(cf.partial_quotient(k));
  for (std::size_t j = k - 1; j >= 1; --j) {
    value = Rational(cf.partial_quotient(j)) + 1 / value;
  }
  return Rational(cf.a0) + 1 / value;
}

MovingAverageReport moving_average(const ContinuedFraction& cf, std::size_t M) {
  if (cf.terminated) {
    throw Error(ErrorCode::RationalInput, "moving averages are defined for irrational inputs only");
  }
  if (M < 1) throw Error(ErrorCode::InvalidParams, "M must be >= 1");
  if (auto known = cf.known_terms()) {
    if (*known == 0) throw Error(ErrorCode::InvalidParams, "no partial quotients beyond a0");
    M = std::min(M, *known);
  }
  MovingAverageReport report;
  report.values.reserve(M);
  Integer sum = 0;
  for (std::size_t m = 1; m <= M; ++m) {
    sum += cf.partial_quotient(m);
    Rational avg = make_rational(sum, Integer(static_cast<unsigned long>(m)));
    if (m == 1 || avg > report.supremum_observed) report.supremum_observed = avg;
    report.values.push_back(std::move(avg));
  }
  if (cf.periodic()) {
    Integer period_sum = 0;
    for (const auto& a : cf.period) period_sum += a;
    const Rational mean = make_rational(period_sum, Integer(static_cast<unsigned long>(cf.period.size())));
    report.limit = mean;
    report.bounded = true;
  }
  return report;
}

}  // namespace ietseq
