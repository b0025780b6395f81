#include "ietseq/figure2.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ietseq/error.hpp"

namespace ietseq {

N3Lengths figure2_lengths(const QuadReal& gamma, const QuadReal& lc, unsigned grid, bool& fallback,
                          std::string& note) {
  try {
    N3Lengths out = n3_from_gamma(gamma, lc);
    fallback = false;
    note = "lambda_C = " + lc.str() + " as requested";
    return out;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonPositiveResult) throw;
    note = std::string(e.what());
  }
  if (grid == 0) throw Error(ErrorCode::InvalidParams, "grid must be >= 1");
  const QuadReal one(1);
  const QuadReal lo = one - gamma;
  const QuadReal hi = gamma;
  if (!(lo < hi)) throw Error(ErrorCode::InvalidParams, "no positive lengths exist for gamma = " + gamma.str());
  const QuadReal target = lo + (lc / gamma) * (hi - lo);
  // Nearest k/grid strictly inside (lo, hi); ties go to the smaller k.
  const long k0 = floor(target * QuadReal(static_cast<long>(grid))).get_si();
  std::optional<QuadReal> best;
  QuadReal best_dist;
  for (long k = k0 - static_cast<long>(grid); k <= k0 + static_cast<long>(grid) + 1; ++k) {
    const QuadReal c(make_rational(k, static_cast<long>(grid)));
    if (!(lo < c && c < hi)) continue;
    const QuadReal dist = abs(c - target);
    if (!best || dist < best_dist) {
      best = c;
      best_dist = dist;
    }
  }
  if (!best) throw Error(ErrorCode::InvalidParams, "grid 1/" + std::to_string(grid) + " misses (1-gamma, gamma)");
  fallback = true;
  note = "requested lambda_C = " + lc.str() + " fails positivity (" + note + "); using lambda_C = " + best->str() +
         " (nearest 1/" + std::to_string(grid) + " grid point to " + target.str() + ")";
  return n3_from_gamma(gamma, *best);
}

Figure2Result run_figure2(Figure2Options options) {
  if (options.lc_requested.empty()) {
    options.lc_requested = {options.gamma / QuadReal(2), options.gamma / QuadReal(4)};
  }
  if (options.lc_requested.size() != 2) throw Error(ErrorCode::InvalidParams, "figure2 needs two lambda_C values");
  BoundOptions bopts;
  bopts.c_up_min_n = 10;

  Figure2Result out;
  out.options = options;
  out.rotation = curve(PointStream::kronecker(options.gamma), options.n_max, options.step);
  out.rotation_bounds = bound_monitor(out.rotation, bopts);
  for (const auto& lc : options.lc_requested) {
    Figure2Iet item;
    item.lc_requested = lc;
    item.lengths = figure2_lengths(options.gamma, lc, options.grid, item.fallback, item.note);
    Iet f = n3_standard(item.lengths.a, item.lengths.b, item.lengths.c);
    item.curve = curve(PointStream::iet_orbit(std::move(f), QuadReal(0)), options.n_max, options.step);
    item.bounds = bound_monitor(item.curve, bopts);
    out.iets.push_back(std::move(item));
  }
  return out;
}

std::string figure2_csv(const Figure2Result& r, int precision) {
  std::ostringstream os;
  os << "# rotation by gamma = " << r.options.gamma.str() << "\n";
  const char* tags[] = {"iet_a", "iet_b"};
  for (std::size_t i = 0; i < r.iets.size(); ++i) {
    const auto& it = r.iets[i];
    os << "# " << tags[i] << ": " << it.note << "\n";
    os << "# " << tags[i] << ": lambda = (" << it.lengths.a.str() << ", " << it.lengths.b.str() << ", "
       << it.lengths.c.str() << "), x0 = 0\n";
  }
  char buf[64];
  auto cup = [&](const char* tag, const BoundReport& b) {
    std::snprintf(buf, sizeof buf, "%.12f", b.c_up);
    os << "# C_up(" << tag << ", N>=10) = " << buf << "\n";
  };
  cup("rotation", r.rotation_bounds);
  for (std::size_t i = 0; i < r.iets.size(); ++i) cup(tags[i], r.iets[i].bounds);
  os << "N,Dstar_rotation,Dstar_iet_a,Dstar_iet_b,logN_over_N\n";
  for (std::size_t k = 0; k < r.rotation.entries.size(); ++k) {
    const std::size_t n = r.rotation.entries[k].n;
    os << n << ',' << to_decimal(r.rotation.entries[k].dstar, precision) << ','
       << to_decimal(r.iets[0].curve.entries[k].dstar, precision) << ','
       << to_decimal(r.iets[1].curve.entries[k].dstar, precision) << ',';
    std::snprintf(buf, sizeof buf, "%.*f", precision, std::log(static_cast<double>(n)) / static_cast<double>(n));
    os << buf << '\n';
  }
  return os.str();
}

}  // namespace ietseq
