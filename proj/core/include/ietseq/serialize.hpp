#pragma once

#include <span>
#include <string>

#include "ietseq/iet.hpp"
#include "ietseq/quad_real.hpp"

namespace ietseq {

/// {n, pi0, pi1, lengths, w} with exact strings.
std::string to_json(const Iet& f);
/// {first_index, points, itinerary}.
std::string to_json(const OrbitSegment& seg);

/// `index,exact,decimal` rows; `first_index` numbers the first row.
std::string points_csv(std::span<const QuadReal> points, int precision, long first_index = 0);
/// [{index, exact, decimal}, ...]
std::string points_json(std::span<const QuadReal> points, int precision, long first_index = 0);

}  // namespace ietseq
