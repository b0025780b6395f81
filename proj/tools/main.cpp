#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ietseq/constructions.hpp"
#include "ietseq/continued_fraction.hpp"
#include "ietseq/discrepancy.hpp"
#include "ietseq/error.hpp"
#include "ietseq/figure2.hpp"
#include "ietseq/sequences.hpp"
#include "ietseq/serialize.hpp"
#include "ietseq/verify.hpp"

using namespace ietseq;
using nlohmann::json;

namespace {

struct Config {
  std::string kind = "kronecker";
  long L = 1;
  long S = 1;
  long r = 0;
  std::size_t n = 10;
  std::string z = "golden";
  std::string lambda_a;
  std::string lambda_b;
  std::string lambda_c;
  std::string x0 = "0";
  std::string sub_left;
  std::string sub_right;
  std::string gamma = "golden";
  std::vector<std::string> lc;
  std::size_t N = 0;
  std::size_t step = 1;
  int precision = 12;
  std::string format = "csv";
  std::string suite = "all";
  long window = 50;
  unsigned lmax = 8;
  std::size_t terms = 256;
  std::size_t averages = 64;
  std::string value;
  std::string out;
};

void write_out(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidParams, "cannot open " + c.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

QuadReal need(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::InvalidParams, std::string("missing ") + flag);
  return QuadReal::parse(text);
}

PointStream make_stream(const Config& c) {
  std::optional<PointStream> s;
  if (c.kind == "kronecker") {
    s = PointStream::kronecker(QuadReal::parse(c.z));
  } else if (c.kind == "ls") {
    s = PointStream::ls(c.L, c.S);
  } else if (c.kind == "jls") {
    s = PointStream::jls(c.L, c.S);
  } else if (c.kind == "n3") {
    Iet f = n3_standard(need(c.lambda_a, "--lambda-a"), need(c.lambda_b, "--lambda-b"),
                        need(c.lambda_c, "--lambda-c"));
    s = PointStream::iet_orbit(std::move(f), QuadReal::parse(c.x0));
  } else if (c.kind == "fls") {
    s = PointStream::iet_orbit(fls(c.L, c.S), fls_start(c.L, c.S, c.r).x0);
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown --kind '" + c.kind + "' (kronecker, ls, jls, n3, fls)");
  }
  if (!c.sub_left.empty() || !c.sub_right.empty()) {
    const QuadReal left = c.sub_left.empty() ? s->domain().left() : QuadReal::parse(c.sub_left);
    const QuadReal right = c.sub_right.empty() ? s->domain().right() : QuadReal::parse(c.sub_right);
    s = PointStream::restriction(*s, Interval1D(left, right));
  }
  return *s;
}

json box_json(const DiscrepancyBox& b) {
  return {{"left", b.left.str()},
          {"right", b.right.str()},
          {"left_closed", !b.left_limit},
          {"right_closed", b.right_limit}};
}

int cmd_gen(const Config& c) {
  const PointStream s = make_stream(c);
  const auto pts = s.take(c.n);
  if (c.format == "json") {
    json j;
    j["stream"] = json::parse(s.descriptor_json());
    j["points"] = json::parse(points_json(pts, c.precision));
    write_out(c, j.dump(2));
  } else {
    write_out(c, "# " + s.descriptor_json() + "\n" + points_csv(pts, c.precision));
  }
  return 0;
}

int cmd_disc(const Config& c) {
  const PointStream s = make_stream(c);
  const std::size_t n = c.N ? c.N : c.n;
  const auto pts = s.take(n);
  const DiscrepancyResult star = star_disc_interval(pts, s.domain());
  std::vector<QuadReal> scaled;
  for (const auto& x : pts) scaled.push_back(s.domain().to_unit(x));
  const DiscrepancyResult ext = extreme_disc_unit(scaled);
  if (c.format == "json") {
    json j;
    j["stream"] = json::parse(s.descriptor_json());
    j["N"] = n;
    j["star"] = {{"exact", star.value.str()},
                 {"decimal", to_decimal(star.value, c.precision)},
                 {"box", box_json(star.box)}};
    j["extreme"] = {{"exact", ext.value.str()}, {"decimal", to_decimal(ext.value, c.precision)}};
    write_out(c, j.dump(2));
  } else {
    std::ostringstream os;
    os << "# " << s.descriptor_json() << "\nN,Dstar,Dstar_exact,D,D_exact\n"
       << n << ',' << to_decimal(star.value, c.precision) << ',' << star.value.str() << ','
       << to_decimal(ext.value, c.precision) << ',' << ext.value.str() << '\n';
    write_out(c, os.str());
  }
  return 0;
}

int cmd_curve(const Config& c) {
  const PointStream s = make_stream(c);
  const std::size_t n_max = c.N ? c.N : c.n;
  const DiscrepancyCurve cv = curve(s, n_max, c.step);
  if (c.format == "json") {
    json j;
    j["stream"] = json::parse(cv.stream);
    j["N_max"] = cv.n_max;
    j["step"] = cv.step;
    json entries = json::array();
    for (const auto& e : cv.entries) {
      entries.push_back({{"N", e.n}, {"Dstar", to_decimal(e.dstar, c.precision)}, {"exact", e.dstar.str()}});
    }
    j["entries"] = entries;
    try {
      j["bounds"] = json::parse(to_json(bound_monitor(cv)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientData) throw;
      j["bounds"] = nullptr;
    }
    write_out(c, j.dump(2));
  } else {
    write_out(c, "# " + cv.stream + "\n" + curve_csv(cv, c.precision));
  }
  return 0;
}

int cmd_cf(const Config& c) {
  const QuadReal x = QuadReal::parse(c.value.empty() ? c.z : c.value);
  const ContinuedFraction cf = cf_expand(x, c.terms);
  json j;
  j["value"] = x.str();
  j["cf"] = cf.str();
  j["terminated"] = cf.terminated;
  j["periodic"] = cf.periodic();
  try {
    const MovingAverageReport m = moving_average(cf, c.averages);
    j["moving_average"] = {{"supremum_observed", to_string(m.supremum_observed)},
                           {"limit", m.limit ? json(to_string(*m.limit)) : json()},
                           {"bounded", m.bounded}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RationalInput) throw;
    j["moving_average"] = nullptr;
    j["note"] = e.what();
  }
  if (c.format == "json") {
    write_out(c, j.dump(2));
  } else {
    std::ostringstream os;
    os << "cf " << cf.str() << '\n';
    if (j["moving_average"].is_null()) {
      os << "moving_average none (" << j["note"].get<std::string>() << ")\n";
    } else {
      const auto& m = j["moving_average"];
      os << "moving_average_sup " << m["supremum_observed"].get<std::string>() << '\n'
         << "moving_average_limit " << (m["limit"].is_null() ? "unknown" : m["limit"].get<std::string>()) << '\n'
         << "bounded " << (m["bounded"].get<bool>() ? "yes" : "no") << '\n';
    }
    write_out(c, os.str());
  }
  return 0;
}

int cmd_verify(const Config& c) {
  VerifyOptions o;
  o.L = c.L;
  o.S = c.S;
  o.r = c.r;
  o.window = c.window;
  o.lmax = c.lmax;
  if (c.N) o.n_max = c.N;
  const auto checks = run_verify(c.suite, o);
  write_out(c, verify_json(checks));
  bool ok = true;
  for (const auto& chk : checks) {
    if (!chk.passed) {
      if (ok) std::cerr << "FAILED: " << chk.suite << ": " << chk.name << '\n';
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmd_figure2(const Config& c) {
  Figure2Options o;
  o.gamma = QuadReal::parse(c.gamma);
  for (const auto& s : c.lc) o.lc_requested.push_back(QuadReal::parse(s));
  o.n_max = c.N ? c.N : 2000;
  o.step = c.step;
  const Figure2Result r = run_figure2(o);
  for (const auto& it : r.iets) {
    if (it.fallback) std::cerr << "figure2: " << it.note << '\n';
  }
  write_out(c, figure2_csv(r, c.precision));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-discrepancy sequences from interval exchange transformations"};
  app.require_subcommand(1);
  Config c;

  auto stream_opts = [&](CLI::App* sub) {
    sub->add_option("--kind", c.kind, "kronecker, ls, jls, n3, fls");
    sub->add_option("--L", c.L, "L parameter");
    sub->add_option("--S", c.S, "S parameter");
    sub->add_option("--r", c.r, "start offset for fls orbits");
    sub->add_option("--z", c.z, "rotation number");
    sub->add_option("--lambda-a", c.lambda_a);
    sub->add_option("--lambda-b", c.lambda_b);
    sub->add_option("--lambda-c", c.lambda_c);
    sub->add_option("--x0", c.x0, "orbit start for n3");
    sub->add_option("--sub-left", c.sub_left, "restrict to [sub-left, sub-right)");
    sub->add_option("--sub-right", c.sub_right);
  };
  auto output_opts = [&](CLI::App* sub) {
    sub->add_option("--precision", c.precision, "decimal digits")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "output file (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "emit points of a sequence");
  stream_opts(gen);
  gen->add_option("--n", c.n, "number of points")->check(CLI::PositiveNumber);
  output_opts(gen);

  auto* disc = app.add_subcommand("disc", "star and extreme discrepancy of a prefix");
  stream_opts(disc);
  disc->add_option("--n,--N", c.N, "prefix length")->check(CLI::PositiveNumber);
  output_opts(disc);

  auto* crv = app.add_subcommand("curve", "star discrepancy curve");
  stream_opts(crv);
  crv->add_option("--N", c.N, "largest N")->check(CLI::PositiveNumber);
  crv->add_option("--step", c.step)->check(CLI::PositiveNumber);
  output_opts(crv);

  auto* cf = app.add_subcommand("cf", "continued fraction and moving averages");
  cf->add_option("value", c.value, "exact number, e.g. golden, 3/7, beta(2,2)");
  cf->add_option("--z", c.z, "same as the positional value");
  cf->add_option("--terms", c.terms, "maximum partial quotients")->check(CLI::PositiveNumber);
  cf->add_option("--averages", c.averages, "moving averages to report")->check(CLI::PositiveNumber);
  output_opts(cf);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", c.suite)
      ->check(CLI::IsMember({"scaling", "restriction", "n3", "example35", "orbit-jls", "ls-noncoincidence", "all"}));
  ver->add_option("--L", c.L);
  ver->add_option("--S", c.S);
  ver->add_option("--r", c.r);
  ver->add_option("--window", c.window)->check(CLI::PositiveNumber);
  ver->add_option("--lmax", c.lmax)->check(CLI::PositiveNumber);
  ver->add_option("--N", c.N, "curve length for the restriction suite");
  ver->add_option("--out", c.out);

  auto* fig = app.add_subcommand("figure2", "discrepancy of a rotation and two 3-interval exchanges");
  fig->add_option("--gamma", c.gamma);
  fig->add_option("--lc", c.lc, "two lambda_C values (default gamma/2 gamma/4)")->expected(0, 2);
  fig->add_option("--N", c.N, "largest N (default 2000)");
  fig->add_option("--step", c.step)->check(CLI::PositiveNumber);
  fig->add_option("--precision", c.precision)->check(CLI::PositiveNumber);
  fig->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(c);
    if (*disc) return cmd_disc(c);
    if (*crv) return cmd_curve(c);
    if (*cf) return cmd_cf(c);
    if (*ver) return cmd_verify(c);
    if (*fig) return cmd_figure2(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
