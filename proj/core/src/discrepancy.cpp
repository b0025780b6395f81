#include "ietseq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ietseq/error.hpp"

namespace ietseq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Certified enclosure [lo, hi] of a real value.
struct Encl {
  double lo;
  double hi;
};

void check_unit(std::span<const QuadReal> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  for (const auto& x : points) {
    if (x.sign() < 0 || x >= QuadReal(1)) throw Error(ErrorCode::OutOfDomain, x.str() + " is outside [0, 1)");
  }
}

// Exact order with a double fast path; equal to the exact order because the
// enclosures are certified.
bool less_than(const QuadReal& x, const QuadReal& y) {
  if (x.approx() + x.approx_error() < y.approx() - y.approx_error()) return true;
  if (y.approx() + y.approx_error() < x.approx() - x.approx_error()) return false;
  return x < y;
}

Encl shifted(double c, const QuadReal& x, bool minus_x) {
  // c -/+ x, with c = i/N carrying one rounding error.
  const double v = minus_x ? c - x.approx() : x.approx() - c;
  const double e = x.approx_error() + 4 * kEps * (std::abs(c) + std::abs(x.approx())) + 1e-300;
  return {v - e, v + e};
}

// Index of the exact maximum among the candidates, evaluated exactly only when
// the enclosures overlap the best certified lower bound.
template <class Exact>
std::size_t arg_extreme(const std::vector<Encl>& enc, Exact exact, bool want_max, QuadReal& best_value) {
  double bound = -std::numeric_limits<double>::infinity();
  for (const auto& e : enc) bound = std::max(bound, want_max ? e.lo : -e.hi);
  std::size_t best = enc.size();
  for (std::size_t i = 0; i < enc.size(); ++i) {
    const double reach = want_max ? enc[i].hi : -enc[i].lo;
    if (reach < bound) continue;
    QuadReal v = exact(i);
    if (best == enc.size() || (want_max ? best_value < v : v < best_value)) {
      best = i;
      best_value = std::move(v);
    }
  }
  return best;
}

DiscrepancyResult star_sorted(const std::vector<const QuadReal*>& xs) {
  const std::size_t n = xs.size();
  const double dn = static_cast<double>(n);
  // Candidate 2i is i/N - x_(i) (i 1-based), 2i+1 is x_(i) - (i-1)/N.
  std::vector<Encl> enc(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    enc[2 * i] = shifted(static_cast<double>(i + 1) / dn, *xs[i], true);
    enc[2 * i + 1] = shifted(static_cast<double>(i) / dn, *xs[i], false);
  }
  const auto N = static_cast<long>(n);
  auto exact = [&](std::size_t c) {
    const std::size_t i = c / 2;
    if (c % 2 == 0) return QuadReal(make_rational(static_cast<long>(i + 1), N)) - *xs[i];
    return *xs[i] - QuadReal(make_rational(static_cast<long>(i), N));
  };
  DiscrepancyResult out;
  out.n = n;
  const std::size_t c = arg_extreme(enc, exact, true, out.value);
  out.box.left = QuadReal(0);
  out.box.right = *xs[c / 2];
  out.box.right_limit = (c % 2 == 0);
  return out;
}

std::vector<const QuadReal*> sorted_view(std::span<const QuadReal> points) {
  std::vector<const QuadReal*> xs;
  xs.reserve(points.size());
  for (const auto& x : points) xs.push_back(&x);
  std::stable_sort(xs.begin(), xs.end(), [](const QuadReal* a, const QuadReal* b) { return less_than(*a, *b); });
  return xs;
}

}  // namespace

DiscrepancyResult star_disc_unit(std::span<const QuadReal> points) {
  check_unit(points);
  return star_sorted(sorted_view(points));
}

DiscrepancyResult extreme_disc_unit(std::span<const QuadReal> points) {
  check_unit(points);
  const auto xs = sorted_view(points);
  const std::size_t n = xs.size();
  const auto N = static_cast<long>(n);
  std::vector<Encl> enc(n);
  for (std::size_t i = 0; i < n; ++i) {
    enc[i] = shifted(static_cast<double>(i + 1) / static_cast<double>(n), *xs[i], true);
  }
  auto exact = [&](std::size_t i) { return QuadReal(make_rational(static_cast<long>(i + 1), N)) - *xs[i]; };
  QuadReal hi;
  QuadReal lo;
  const std::size_t imax = arg_extreme(enc, exact, true, hi);
  const std::size_t imin = arg_extreme(enc, exact, false, lo);
  DiscrepancyResult out;
  out.n = n;
  out.value = QuadReal(make_rational(1, N)) + hi - lo;
  if (imax >= imin) {
    out.box.left = *xs[imin];
    out.box.right = *xs[imax];
    out.box.right_limit = true;
  } else {
    out.box.left = *xs[imax];
    out.box.right = *xs[imin];
    out.box.left_limit = true;
  }
  return out;
}

DiscrepancyResult brute_force_star(std::span<const QuadReal> points) {
  check_unit(points);
  const auto N = static_cast<long>(points.size());
  std::vector<QuadReal> cands(points.begin(), points.end());
  cands.emplace_back(1);
  DiscrepancyResult out;
  out.n = points.size();
  out.value = QuadReal(0);
  out.box = {QuadReal(0), QuadReal(0), false, false};
  for (const auto& b : cands) {
    long lt = 0;
    long le = 0;
    for (const auto& x : points) {
      if (x < b) ++lt;
      if (x <= b) ++le;
    }
    const QuadReal open = abs(QuadReal(make_rational(lt, N)) - b);
    const QuadReal closed = abs(QuadReal(make_rational(le, N)) - b);
    if (out.value < open) {
      out.value = open;
      out.box = {QuadReal(0), b, false, false};
    }
    if (out.value < closed) {
      out.value = closed;
      out.box = {QuadReal(0), b, false, true};
    }
  }
  return out;
}

DiscrepancyResult star_disc_interval(std::span<const QuadReal> points, const Interval1D& interval) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  std::vector<QuadReal> scaled;
  scaled.reserve(points.size());
  for (const auto& x : points) {
    if (!interval.contains(x)) throw Error(ErrorCode::OutOfDomain, x.str() + " is outside the interval");
    scaled.push_back(interval.to_unit(x));
  }
  DiscrepancyResult out = star_disc_unit(scaled);
  const QuadReal len = interval.length();
  out.box.left = interval.left() + out.box.left * len;
  out.box.right = interval.left() + out.box.right * len;
  return out;
}

DiscrepancyResult star_disc(std::span<const std::vector<QuadReal>> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorCode::InvalidParams, "points of mixed dimension");
  }
  if (d != 1) throw Error(ErrorCode::Unsupported, "dimension " + std::to_string(d) + " is not supported");
  std::vector<QuadReal> flat;
  flat.reserve(points.size());
  for (const auto& p : points) flat.push_back(p.front());
  return star_disc_unit(flat);
}

DiscrepancyCurve curve_from_points(std::span<const QuadReal> points, const Interval1D& domain, std::size_t step,
                                   std::string label) {
  if (step == 0) throw Error(ErrorCode::InvalidParams, "step must be >= 1");
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  DiscrepancyCurve out;
  out.stream = std::move(label);
  out.n_max = points.size();
  out.step = step;
  std::vector<QuadReal> scaled;
  scaled.reserve(points.size());
  const bool unit = domain == Interval1D::unit();
  for (const auto& x : points) {
    if (!domain.contains(x)) throw Error(ErrorCode::OutOfDomain, x.str() + " is outside the stream domain");
    scaled.push_back(unit ? x : domain.to_unit(x));
  }
  // Sorted order is maintained by insertion; D* is recomputed at each grid point.
  std::vector<const QuadReal*> xs;
  xs.reserve(scaled.size());
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    const QuadReal* p = &scaled[k];
    auto pos = std::upper_bound(xs.begin(), xs.end(), p,
                                [](const QuadReal* a, const QuadReal* b) { return less_than(*a, *b); });
    xs.insert(pos, p);
    if ((k + 1) % step == 0) {
      DiscrepancyResult d = star_sorted(xs);
      out.entries.push_back({k + 1, std::move(d.value), std::move(d.box)});
    }
  }
  return out;
}

DiscrepancyCurve curve(const PointStream& stream, std::size_t n_max, std::size_t step) {
  if (step == 0 || n_max < step) throw Error(ErrorCode::InvalidParams, "need 1 <= step <= N_max");
  const auto pts = stream.take(n_max);
  return curve_from_points(pts, stream.domain(), step, stream.descriptor_json());
}

BoundReport bound_monitor(const DiscrepancyCurve& curve, const BoundOptions& options) {
  BoundReport out;
  bool have_c = false;
  for (const auto& e : curve.entries) {
    if (e.n < 2) continue;
    const double scaled = static_cast<double>(e.n) * e.dstar.approx() / std::log(static_cast<double>(e.n));
    if (e.n >= options.c_up_min_n && (!have_c || scaled > out.c_up)) {
      out.c_up = scaled;
      out.n_at_c_up = e.n;
      have_c = true;
    }
    const auto j = static_cast<unsigned>(std::bit_width(e.n) - 1);
    if (out.blocks.empty() || out.blocks.back().j != j) out.blocks.push_back({j, e.n, scaled});
    else if (scaled > out.blocks.back().max) out.blocks.back() = {j, e.n, scaled};
  }
  if (out.blocks.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "need at least two dyadic blocks, have " +
                                                 std::to_string(out.blocks.size()));
  }
  out.schmidt_ok = std::all_of(out.blocks.begin(), out.blocks.end(),
                               [&](const BlockStat& b) { return b.max >= options.schmidt_constant; });
  const std::size_t half = out.blocks.size() / 2;
  double early = 0.0;
  double late = 0.0;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    (i < half ? early : late) = std::max(i < half ? early : late, out.blocks[i].max);
  }
  out.low_discrepancy_consistent = late <= options.growth_factor * early;
  return out;
}

std::string to_json(const BoundReport& report) {
  nlohmann::json j;
  j["C_up"] = report.c_up;
  j["N_at_C_up"] = report.n_at_c_up;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : report.blocks) {
    j["blocks"].push_back({{"j", b.j}, {"N_at_max", b.n_at_max}, {"max", b.max}});
  }
  j["schmidt_ok"] = report.schmidt_ok;
  j["verdict"] = report.low_discrepancy_consistent ? "consistent" : "inconsistent";
  return j.dump(2);
}

std::string curve_csv(const DiscrepancyCurve& curve, int precision) {
  std::ostringstream os;
  os << "N,Dstar,scaled\n";
  char buf[64];
  for (const auto& e : curve.entries) {
    os << e.n << ',' << to_decimal(e.dstar, precision) << ',';
    if (e.n > 1) {
      std::snprintf(buf, sizeof buf, "%.*f", precision,
                    static_cast<double>(e.n) * e.dstar.approx() / std::log(static_cast<double>(e.n)));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ietseq
