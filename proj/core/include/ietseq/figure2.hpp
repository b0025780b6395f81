#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ietseq/constructions.hpp"
#include "ietseq/discrepancy.hpp"

namespace ietseq {

struct Figure2Options {
  QuadReal gamma = golden();
  std::vector<QuadReal> lc_requested;  // empty: gamma/2 and gamma/4
  std::size_t n_max = 2000;
  std::size_t step = 1;
  unsigned grid = 64;  // fallback lambda_C is searched on k/grid
};

/// Lengths with lambda* = 1 and rotation ratio gamma. Tries lambda_C as
/// given; if positivity fails, maps it linearly from (0, gamma) onto the
/// admissible range (1 - gamma, gamma) and snaps to the nearest admissible
/// k/grid. `note` describes the choice.
N3Lengths figure2_lengths(const QuadReal& gamma, const QuadReal& lc, unsigned grid, bool& fallback,
                          std::string& note);

struct Figure2Iet {
  QuadReal lc_requested;
  N3Lengths lengths;
  bool fallback = false;
  std::string note;
  DiscrepancyCurve curve;
  BoundReport bounds;
};

struct Figure2Result {
  Figure2Options options;
  DiscrepancyCurve rotation;
  BoundReport rotation_bounds;
  std::vector<Figure2Iet> iets;
};

/// Rotation by gamma and two n = 3 IET orbits from 0, all on [0, 1).
/// C_up is taken over N >= 10.
Figure2Result run_figure2(Figure2Options options = {});

/// `N,Dstar_rotation,Dstar_iet_a,Dstar_iet_b,logN_over_N` with `#` header
/// comments describing the parameters.
std::string figure2_csv(const Figure2Result& result, int precision);

}  // namespace ietseq
