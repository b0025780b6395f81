#include "ietseq/verify.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "ietseq/constructions.hpp"
#include "ietseq/discrepancy.hpp"
#include "ietseq/error.hpp"
#include "ietseq/figure2.hpp"
#include "ietseq/sequences.hpp"

namespace ietseq {

namespace {

using nlohmann::json;

CheckResult make(const char* suite, std::string name, bool ok, const json& detail) {
  return {suite, std::move(name), ok, detail.dump()};
}

Rational random_unit(std::mt19937_64& rng) {
  const long den = std::uniform_int_distribution<long>(1, 997)(rng);
  const long num = std::uniform_int_distribution<long>(0, den - 1)(rng);
  return make_rational(num, den);
}

void suite_scaling(const VerifyOptions& o, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(o.seed);
  std::size_t failures = 0;
  std::size_t shift_failures = 0;
  for (std::size_t t = 0; t < o.samples; ++t) {
    QuadReal a(random_unit(rng) - Rational(1, 2));
    QuadReal b = a + QuadReal(random_unit(rng) + Rational(1, 8));
    const Interval1D I(a, b);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    std::vector<QuadReal> pts;
    std::vector<QuadReal> scaled;
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(a + QuadReal(random_unit(rng)) * I.length());
      scaled.push_back(I.to_unit(pts.back()));
    }
    const QuadReal v = star_disc_interval(pts, I).value;
    if (v != star_disc_unit(scaled).value) ++failures;
    const QuadReal c(random_unit(rng));
    std::vector<QuadReal> moved;
    for (const auto& x : pts) moved.push_back(x + c);
    if (star_disc_interval(moved, Interval1D(a + c, b + c)).value != v) ++shift_failures;
  }
  out.push_back(make("scaling", "scaled equals unit discrepancy", failures == 0,
                     {{"samples", o.samples}, {"failures", failures}}));
  out.push_back(make("scaling", "affine shift invariance", shift_failures == 0,
                     {{"samples", o.samples}, {"failures", shift_failures}}));

  // Rotation orbit on [0, 1 + lambda_B) with the figure2 lengths.
  bool fb = false;
  std::string note;
  const N3Lengths l = figure2_lengths(golden(), golden() / QuadReal(2), 64, fb, note);
  const QuadReal total = QuadReal(1) + l.b;
  const QuadReal angle = l.b + l.c;
  std::vector<QuadReal> orbit_pts;
  std::vector<QuadReal> scaled;
  QuadReal y(0);
  for (int i = 0; i < 200; ++i) {
    orbit_pts.push_back(y);
    scaled.push_back(y / total);
    y += angle;
    if (y >= total) y -= total;
  }
  const bool ok = star_disc_interval(orbit_pts, Interval1D(QuadReal(0), total)).value ==
                  star_disc_unit(scaled).value;
  out.push_back(make("scaling", "rotation orbit on [0, 1 + lambda_B)", ok, {{"N", 200}, {"total", total.str()}}));
}

void suite_restriction(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto full = PointStream::kronecker(golden());
  const auto half = PointStream::restriction(full, Interval1D(QuadReal(0), QuadReal(Rational(1, 2))));
  BoundOptions bo;
  bo.c_up_min_n = 10;
  const BoundReport a = bound_monitor(curve(full, o.n_max, 1), bo);
  const BoundReport b = bound_monitor(curve(half, o.n_max, 1), bo);
  const double ratio = b.c_up / a.c_up;
  const bool ok = std::isfinite(b.c_up) && ratio <= 4.0 && ratio >= 0.25;
  out.push_back(make("restriction", "restricted C_up within 4x of unrestricted", ok,
                     {{"N_max", o.n_max}, {"C_up_full", a.c_up}, {"C_up_half", b.c_up}, {"ratio", ratio}}));
}

void suite_n3(const VerifyOptions& o, std::vector<CheckResult>& out) {
  bool fb = false;
  std::string note;
  const QuadReal g = golden();
  const N3Lengths l = figure2_lengths(g, g / QuadReal(2), 64, fb, note);
  const Iet f = n3_standard(l.a, l.b, l.c);
  const QuadReal total = QuadReal(1) + l.b;
  const QuadReal angle = l.b + l.c;
  std::vector<QuadReal> ys{QuadReal(0), l.a, l.a + l.b};
  for (std::size_t j = 1; ys.size() < o.samples; ++j) ys.push_back(frac(QuadReal(static_cast<long>(j)) * g));
  std::size_t value_failures = 0;
  std::size_t step_failures = 0;
  json first;
  for (const auto& y : ys) {
    const FirstReturn fr = first_return(total, angle, QuadReal(1), y);
    const bool middle = l.a <= y && y < l.a + l.b;
    const bool ok_value = fr.point == f(y);
    const bool ok_steps = fr.steps == (middle ? 2 : 1);
    if (!ok_value) ++value_failures;
    if (!ok_steps) ++step_failures;
    if ((!ok_value || !ok_steps) && first.is_null()) first = {{"y", y.str()}, {"steps", fr.steps}};
  }
  out.push_back(make("n3", "IET equals first return of the rotation", value_failures == 0 && step_failures == 0,
                     {{"lengths", {l.a.str(), l.b.str(), l.c.str()}},
                      {"samples", ys.size()},
                      {"value_failures", value_failures},
                      {"step_failures", step_failures},
                      {"first_failure", first}}));

  const N3Certificate cert = n3_certificate(l.a, l.b, l.c);
  out.push_back(make("n3", "rotation number has bounded moving average", cert.irrational && cert.low_discrepancy,
                     {{"rotation_number", cert.rotation_number.str()},
                      {"cf", cert.cf.str()},
                      {"limit", cert.moving_average && cert.moving_average->limit
                                    ? to_string(*cert.moving_average->limit)
                                    : std::string()}}));
}

void suite_example35(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const Iet f = fls(2, 2);
  const QuadReal b = beta(2, 2);
  const QuadReal b2 = b * b;
  const std::vector<QuadReal> w{b + b2, -b, b2, -b - b2};
  out.push_back(make("example35", "translation vector of fls(2,2)", f.translations() == w,
                     {{"w", [&] {
                        json a = json::array();
                        for (const auto& x : f.translations()) a.push_back(x.str());
                        return a;
                      }()}}));
  const auto fail = fls22_pairing_failure(-o.window, o.window);
  out.push_back(make("example35", "pair structure", !fail,
                     {{"k_range", {-o.window, o.window}}, {"first_failure", fail ? json(*fail) : json()}}));
}

void suite_orbit_jls(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const long cycle = o.L * o.L + o.L + o.S;
  const long window = std::max(o.window, 2 * (cycle + 1));
  const JlsOrbitReport rep = orbit_matches_jls(o.L, o.S, o.r, window);
  out.push_back(make("orbit-jls", "orbit of x0 realizes J_{L,S} with the return schedule", rep.passed(),
                     {{"L", o.L},
                      {"S", o.S},
                      {"r", o.r},
                      {"x0", rep.x0.str()},
                      {"q0", rep.q0},
                      {"window", window},
                      {"expected_cycle", rep.expected_cycle},
                      {"observed_cycle", rep.observed_cycle ? json(*rep.observed_cycle) : json()},
                      {"membership_ok", rep.membership_ok},
                      {"schedule_ok", rep.schedule_ok},
                      {"mismatch_at", rep.mismatch_at ? json(*rep.mismatch_at) : json()},
                      {"detail", rep.detail}}));
}

void suite_ls_noncoincidence(const VerifyOptions& o, std::vector<CheckResult>& out) {
  json rows = json::array();
  bool ok = true;
  for (unsigned l = 1; l <= o.lmax; ++l) {
    const auto [a, b] = beta_power_coords(o.L, o.S, l);
    const Integer den = lcm(a.get_den(), b.get_den());
    const bool integral = den == 1;
    const bool expected_integral = o.S == 1 || l < 2;
    if (integral != expected_integral) ok = false;
    rows.push_back({{"l", l}, {"a", to_string(a)}, {"b", to_string(b)}, {"denominator", den.get_str()},
                    {"integral", integral}});
  }
  out.push_back(make("ls-noncoincidence", "beta^l coordinates in (1, beta)", ok,
                     {{"L", o.L}, {"S", o.S}, {"lmax", o.lmax}, {"powers", rows}}));
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"scaling",   "restriction", "n3",
                                              "example35", "orbit-jls",   "ls-noncoincidence"};
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  auto run_one = [&](const std::string& name) {
    if (name == "scaling") suite_scaling(options, out);
    else if (name == "restriction") suite_restriction(options, out);
    else if (name == "n3") suite_n3(options, out);
    else if (name == "example35") suite_example35(options, out);
    else if (name == "orbit-jls") suite_orbit_jls(options, out);
    else if (name == "ls-noncoincidence") suite_ls_noncoincidence(options, out);
    else throw Error(ErrorCode::InvalidParams, "unknown suite '" + name + "'");
  };
  if (suite == "all") {
    for (const auto& name : verify_suites()) run_one(name);
  } else {
    run_one(suite);
  }
  return out;
}

std::string verify_json(const std::vector<CheckResult>& checks) {
  json j;
  json arr = json::array();
  json first;
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", json::parse(c.detail)}});
    if (!c.passed && all) first = c.suite + ": " + c.name;
    all = all && c.passed;
  }
  j["passed"] = all;
  j["first_failure"] = first;
  j["checks"] = arr;
  return j.dump(2);
}

}  // namespace ietseq
