#include "gelfand/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

constexpr int kBoundCap = 60;

double check_k(int k) {
  if (k < 1) throw ValidationError("asymptotic bounds need k >= 1");
  return static_cast<double>(k);
}

}  // namespace

double vk_lower(int k) {
  const double x = check_k(k);
  const double c = std::numbers::pi / std::sqrt(6.0);
  return std::exp(-c * std::sqrt(x) + 0.5 * std::lgamma(x + 1.0));
}

double hr_upper(int k) {
  const double x = check_k(k);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) /
         (4.0 * x * std::sqrt(3.0));
}

double r_ratio(int k) {
  const double x = check_k(k);
  const double c = std::numbers::pi / std::sqrt(6.0);
  const double log_2k_sqrt3 = std::log(2.0 * x * std::sqrt(3.0));
  const double a = log_2k_sqrt3 - c * std::sqrt(x) + 0.5 * std::lgamma(x + 1.0);
  const double b = std::log(4.0 * x * std::sqrt(3.0));
  const double denom = std::numbers::pi * std::sqrt(2.0 * x / 3.0);
  return std::exp(a - denom) - std::exp(b - denom);
}

BoundRow inequality_check(int k) {
  if (k < 1 || k > kBoundCap) {
    throw SizeLimitError("bound table needs 1 <= k <= " +
                         std::to_string(kBoundCap) + ", got " +
                         std::to_string(k));
  }
  BoundRow row;
  row.k = k;
  row.dim_max = max_dimension(k).dim;
  row.threshold = 2 * to_int64(partition_count(k)) + 2;
  row.vk = vk_lower(k);
  row.hr = hr_upper(k);
  row.r = r_ratio(k);
  row.eq4_holds = (row.dim_max >= row.threshold);
  return row;
}

std::vector<BoundRow> bound_table(int k_from, int k_to) {
  if (k_from < 1 || k_from > k_to || k_to > kBoundCap) {
    throw SizeLimitError("bound table needs 1 <= from <= to <= " +
                         std::to_string(kBoundCap));
  }
  std::vector<BoundRow> rows;
  rows.reserve(static_cast<size_t>(k_to - k_from + 1));
  for (int k = k_from; k <= k_to; ++k) rows.push_back(inequality_check(k));
  return rows;
}

}  // namespace gelfand
