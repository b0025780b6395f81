#include "ietseq/constructions.hpp"

#include <numeric>
#include <sstream>

#include "ietseq/error.hpp"

namespace ietseq {

namespace {

void require_positive(const QuadReal& x, const char* name) {
  if (x.sign() <= 0) throw Error(ErrorCode::NonPositiveLength, std::string(name) + " = " + x.str() + " is not > 0");
}

void require_params(long L, long S) {
  if (L < 1 || S < 1) {
    throw Error(ErrorCode::InvalidParams, "need L >= 1 and S >= 1, got L=" + std::to_string(L) +
                                              " S=" + std::to_string(S));
  }
}

}  // namespace

Iet n3_standard(const QuadReal& la, const QuadReal& lb, const QuadReal& lc) {
  require_positive(la, "lambda_A");
  require_positive(lb, "lambda_B");
  require_positive(lc, "lambda_C");
  return Iet::build(CombinatorialData::identity_top({3, 2, 1}), {la, lb, lc});
}

N3Certificate n3_certificate(const QuadReal& la, const QuadReal& lb, const QuadReal& lc, std::size_t cf_terms,
                             std::size_t averages) {
  require_positive(la, "lambda_A");
  require_positive(lb, "lambda_B");
  require_positive(lc, "lambda_C");
  N3Certificate cert;
  cert.rotation_number = (lb + lc) / (la + lb + lc + lb);
  cert.irrational = !cert.rotation_number.is_rational();
  cert.cf = cf_expand(cert.rotation_number, cf_terms);
  if (cert.irrational) {
    cert.moving_average = moving_average(cert.cf, averages);
    cert.low_discrepancy = cert.moving_average->bounded;
  }
  return cert;
}

N3Lengths n3_from_gamma(const QuadReal& gamma, const QuadReal& lc) {
  if (gamma.sign() <= 0 || gamma >= QuadReal(1)) {
    throw Error(ErrorCode::InvalidParams, "gamma must lie in (0, 1), got " + gamma.str());
  }
  if (lc.sign() <= 0) throw Error(ErrorCode::InvalidParams, "lambda_C must be > 0, got " + lc.str());
  N3Lengths out;
  out.c = lc;
  out.b = (gamma - lc) / (QuadReal(1) - gamma);
  out.a = QuadReal(1) - out.b - out.c;
  if (out.b.sign() <= 0) {
    throw Error(ErrorCode::NonPositiveResult, "lambda_B = " + out.b.str() + " (approx " +
                                                  std::to_string(out.b.approx()) + ") is not > 0");
  }
  if (out.a.sign() <= 0) {
    throw Error(ErrorCode::NonPositiveResult, "lambda_A = " + out.a.str() + " (approx " +
                                                  std::to_string(out.a.approx()) + ") is not > 0");
  }
  return out;
}

FirstReturn first_return(const QuadReal& rotation_total, const QuadReal& angle, const QuadReal& right,
                         const QuadReal& x, long max_steps) {
  if (angle.sign() <= 0 || angle >= rotation_total) {
    throw Error(ErrorCode::InvalidParams, "angle must lie in (0, rotation_total)");
  }
  if (right.sign() <= 0 || right > rotation_total) {
    throw Error(ErrorCode::InvalidParams, "subinterval must satisfy 0 < right <= rotation_total");
  }
  if (x.sign() < 0 || x >= right) throw Error(ErrorCode::OutOfDomain, x.str() + " is outside [0, right)");
  QuadReal y = x;
  for (long step = 1; step <= max_steps; ++step) {
    y += angle;
    if (y >= rotation_total) y -= rotation_total;
    if (y < right) return {y, step};
  }
  throw Error(ErrorCode::NoReturnWithinBudget, "no return within " + std::to_string(max_steps) + " steps");
}

std::vector<int> fls_image_row(long L, long S) {
  require_params(L, S);
  std::vector<int> row;
  row.reserve(static_cast<std::size_t>(L + S));
  for (long i = 2; i <= L; ++i) row.push_back(static_cast<int>(i));
  row.push_back(static_cast<int>(L + S));
  row.push_back(1);
  for (long i = L + 1; i <= L + S - 1; ++i) row.push_back(static_cast<int>(i));
  return row;
}

Iet fls(long L, long S) {
  require_params(L, S);
  const QuadReal b = beta(L, S);
  const QuadReal b2 = b * b;
  std::vector<QuadReal> lengths(static_cast<std::size_t>(L), b);
  lengths.insert(lengths.end(), static_cast<std::size_t>(S), b2);
  return Iet::build(CombinatorialData::identity_top(fls_image_row(L, S)), std::move(lengths));
}

FlsStart fls_start(long L, long S, long r, long max_q) {
  require_params(L, S);
  const QuadReal b = beta(L, S);
  const QuadReal b2 = b * b;
  auto in_first = [&](const QuadReal& y) { return y < b; };
  auto step_down = [&](const QuadReal& y) {
    QuadReal next = y - b2;
    if (next.sign() < 0) next += QuadReal(1);
    return next;
  };

  QuadReal y = frac(QuadReal(-r) * b);
  QuadReal next = step_down(y);
  long bound = 2 * (L + S) * (L + S);
  long q = 0;
  while (true) {
    for (; q <= bound; ++q) {
      if (in_first(y) && !in_first(next)) return {y, q};
      y = next;
      next = step_down(y);
    }
    if (bound >= max_q) break;
    bound = std::min(2 * bound, max_q);
  }
  throw Error(ErrorCode::NotFoundWithinWindow,
              "no q0 in [0, " + std::to_string(bound) + "] for L=" + std::to_string(L) + " S=" +
                  std::to_string(S) + " r=" + std::to_string(r));
}

std::pair<Rational, Rational> beta_power_coords(long L, long S, unsigned l) {
  require_params(L, S);
  // beta^{k+1} = beta * (a + b beta) = a beta + b (1 - L beta) / S.
  Rational a = 1;
  Rational b = 0;
  const Rational inv_s = make_rational(1, S);
  for (unsigned k = 0; k < l; ++k) {
    Rational na = b * inv_s;
    Rational nb = a - b * Rational(L) * inv_s;
    a = std::move(na);
    b = std::move(nb);
  }
  return {a, b};
}

std::optional<std::pair<Integer, Integer>> jls_coordinates(long L, long S, const QuadReal& p) {
  require_params(L, S);
  const QuadReal b = beta(L, S);
  // Coordinates of p in the basis (1, beta).
  Rational u;
  Rational v;
  if (b.is_rational()) {
    // A rational beta makes the basis degenerate: pick v = 0.
    v = 0;
    u = p.rational_part();
    if (!p.is_rational()) return std::nullopt;
  } else {
    if (!p.is_rational() && p.radicand() != b.radicand()) return std::nullopt;
    v = p.radical_coeff() / b.radical_coeff();
    u = p.rational_part() - v * b.rational_part();
  }
  // p = k + m beta + n beta^2 = (k + n/S) + (m - n L/S) beta.
  const Rational su = u * S;
  if (su.get_den() != 1) return std::nullopt;
  Integer n;
  mpz_fdiv_r_ui(n.get_mpz_t(), su.get_num_mpz_t(), static_cast<unsigned long>(S));
  const Rational m = v + make_rational(n * L, S);
  if (m.get_den() != 1) return std::nullopt;
  return std::make_pair(m.get_num(), n);
}

std::vector<int> fls_cycle_schedule(long L, long S) {
  require_params(L, S);
  std::vector<int> schedule{1};
  for (long block = 0; block < L; ++block) {
    for (long i = L; i >= 1; --i) schedule.push_back(static_cast<int>(i));
  }
  for (long i = L + 1; i <= L + S; ++i) schedule.push_back(static_cast<int>(i));
  for (long i = L; i >= 1; --i) schedule.push_back(static_cast<int>(i));
  return schedule;
}

JlsOrbitReport orbit_matches_jls(long L, long S, long r, long window) {
  require_params(L, S);
  if (L < S) {
    throw Error(ErrorCode::HypothesisViolated,
                "needs L >= S, got L=" + std::to_string(L) + " S=" + std::to_string(S));
  }
  JlsOrbitReport report;
  report.L = L;
  report.S = S;
  report.r = r;
  report.window = window;
  report.expected_cycle = L * L + L + S;
  if (window < report.expected_cycle + 1) {
    throw Error(ErrorCode::InvalidParams, "window must be >= L^2 + L + S + 1 = " +
                                              std::to_string(report.expected_cycle + 1));
  }
  const FlsStart start = fls_start(L, S, r);
  report.x0 = start.x0;
  report.q0 = start.q0;
  const Iet f = fls(L, S);
  const QuadReal b = beta(L, S);
  const QuadReal b2 = b * b;
  const OrbitSegment seg = orbit(f, start.x0, -window, window);

  std::ostringstream detail;
  report.membership_ok = true;
  for (std::size_t i = 0; i < seg.points.size(); ++i) {
    if (!jls_coordinates(L, S, seg.points[i])) {
      report.membership_ok = false;
      report.mismatch_at = seg.first_index + static_cast<long>(i);
      detail << "orbit point k=" << *report.mismatch_at << " is not of the form {m beta + n beta^2}. ";
      break;
    }
  }

  const auto zero = static_cast<std::size_t>(window);  // index of k = 0
  for (long k = 1; k <= window; ++k) {
    if (seg.points[zero + static_cast<std::size_t>(k)] < b2) {
      report.observed_cycle = k;
      break;
    }
  }
  report.expected_itinerary = fls_cycle_schedule(L, S);
  report.observed_itinerary.assign(seg.itinerary.begin() + static_cast<std::ptrdiff_t>(zero),
                                   seg.itinerary.begin() + static_cast<std::ptrdiff_t>(zero) +
                                       static_cast<std::ptrdiff_t>(report.expected_itinerary.size()));
  report.schedule_ok = true;
  for (std::size_t i = 0; i < report.expected_itinerary.size(); ++i) {
    if (report.expected_itinerary[i] != report.observed_itinerary[i]) {
      report.schedule_ok = false;
      if (!report.mismatch_at) report.mismatch_at = static_cast<long>(i);
      detail << "itinerary differs from the return schedule at k=" << i << " (I_"
             << report.observed_itinerary[i] << " instead of I_" << report.expected_itinerary[i] << "). ";
      break;
    }
  }
  if (report.schedule_ok && report.observed_cycle != report.expected_cycle) {
    report.schedule_ok = false;
    if (!report.mismatch_at) report.mismatch_at = report.expected_cycle;
    detail << "first return below beta^2 at k="
           << (report.observed_cycle ? std::to_string(*report.observed_cycle) : std::string("none"))
           << ", expected " << report.expected_cycle << ". ";
  }
  report.detail = detail.str();
  if (report.detail.empty()) report.detail = "ok";
  return report;
}

std::optional<long> fls22_pairing_failure(long k_from, long k_to) {
  if (k_from > k_to) throw Error(ErrorCode::InvalidParams, "empty k range");
  const Iet f = fls(2, 2);
  const QuadReal b = beta(2, 2);
  const QuadReal b2 = b * b;
  // The pairing holds for pieces (a, b] on (0, 1]; the value 1 stands for 0.
  const OrbitSegment seg = orbit(f, b, 2 * k_from, 2 * k_to + 1, Endpoint::RightClosed);
  for (long k = k_from; k <= k_to; ++k) {
    const auto at = static_cast<std::size_t>(2 * (k - k_from));
    const QuadReal y = frac(QuadReal(1 - k) * b);
    const QuadReal z = frac(QuadReal(2 - k) * b + b2);
    const QuadReal u = frac(seg.points[at]);
    const QuadReal v = frac(seg.points[at + 1]);
    if (!((u == y && v == z) || (u == z && v == y))) return k;
  }
  return std::nullopt;
}

}  // namespace ietseq
