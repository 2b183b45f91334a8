#pragma once

#include <vector>

#include "gelfand/bigint.hpp"
#include "gelfand/partition.hpp"

namespace gelfand {

// Vershik-Kerov lower bound e^{-c sqrt(k)} sqrt(k!) with c = pi/sqrt(6),
// evaluated in log space.
double vk_lower(int k);

// Hardy-Ramanujan upper bound e^{pi sqrt(2k/3)} / (4 k sqrt(3)).
double hr_upper(int k);

// r(k) = (2k sqrt(3) e^{-c sqrt(k)} sqrt(k!) - 4k sqrt(3)) / e^{pi sqrt(2k/3)},
// evaluated in log space so k! never overflows.
double r_ratio(int k);

struct BoundRow {
  int k = 0;
  BigInt dim_max;           // true maximum irreducible dimension of S_k
  long long threshold = 0;  // 2 p(k) + 2
  double vk = 0.0;
  double hr = 0.0;
  double r = 0.0;
  bool eq4_holds = false;   // dim_max >= threshold
};

// One row of the bound table. 1 <= k <= 60.
BoundRow inequality_check(int k);

// Rows for k_from..k_to. 1 <= k_from <= k_to <= 60.
std::vector<BoundRow> bound_table(int k_from, int k_to);

}  // namespace gelfand
