#include "ietseq/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace ietseq {

namespace {

nlohmann::json strings(std::span<const QuadReal> xs) {
  auto out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

std::string to_json(const Iet& f) {
  nlohmann::json j;
  j["n"] = f.size();
  j["pi0"] = f.combinatorics().pi0;
  j["pi1"] = f.combinatorics().pi1;
  j["lengths"] = strings(f.lengths());
  j["w"] = strings(f.translations());
  return j.dump();
}

std::string to_json(const OrbitSegment& seg) {
  nlohmann::json j;
  j["first_index"] = seg.first_index;
  j["points"] = strings(seg.points);
  j["itinerary"] = seg.itinerary;
  return j.dump();
}

std::string points_csv(std::span<const QuadReal> points, int precision, long first_index) {
  std::ostringstream os;
  os << "index,exact,decimal\n";
  long i = first_index;
  for (const auto& x : points) os << i++ << ',' << x.str() << ',' << to_decimal(x, precision) << '\n';
  return os.str();
}

std::string points_json(std::span<const QuadReal> points, int precision, long first_index) {
  auto arr = nlohmann::json::array();
  long i = first_index;
  for (const auto& x : points) {
    arr.push_back({{"index", i++}, {"exact", x.str()}, {"decimal", to_decimal(x, precision)}});
  }
  return arr.dump(2);
}

}  // namespace ietseq
