#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gelfand/asymptotics.hpp"
#include "gelfand/errors.hpp"

using namespace gelfand;

namespace {

bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("landmark bound values") {
  CHECK(close(vk_lower(12), 257.4239430485239));
  CHECK(close(hr_upper(1), 1.8766704226053692));
  CHECK(close(hr_upper(12), 86.94352075128623));
  CHECK(close(r_ratio(8), 0.0653388824760633));
  CHECK(close(r_ratio(12), 1.4689072908560884));
  CHECK(close(r_ratio(13), 3.3467854019930046));
  CHECK(r_ratio(12) >= 1.0);
  CHECK(r_ratio(11) < 1.0);
}

TEST_CASE("the ratio grows monotonically past the crossover") {
  double prev = r_ratio(12);
  for (int k = 13; k <= 300; ++k) {
    double cur = r_ratio(k);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("log-space evaluation agrees with the direct formula") {
  const double c = std::numbers::pi / std::sqrt(6.0);
  for (int k = 1; k <= 20; ++k) {
    double fact = std::tgamma(static_cast<double>(k) + 1.0);
    double direct_vk = std::exp(-c * std::sqrt(k)) * std::sqrt(fact);
    CHECK(close(vk_lower(k), direct_vk, 1e-8));

    double direct_hr =
        std::exp(std::numbers::pi * std::sqrt(2.0 * k / 3.0)) /
        (4.0 * k * std::sqrt(3.0));
    CHECK(close(hr_upper(k), direct_hr, 1e-8));

    double direct_r = (2.0 * k * std::sqrt(3.0) * direct_vk - 4.0 * k * std::sqrt(3.0)) /
                      std::exp(std::numbers::pi * std::sqrt(2.0 * k / 3.0));
    CHECK(close(r_ratio(k), direct_r, 1e-8));
  }
}

TEST_CASE("bounds bracket the true quantities") {
  // Hardy-Ramanujan dominates p(k); Vershik-Kerov stays below the true
  // maximum dimension, which stays below sqrt(k!)
  for (int k = 1; k <= 60; ++k) {
    CHECK(hr_upper(k) >= to_double(partition_count(k)));
  }
  for (int k = 2; k <= 20; ++k) {
    double dim = to_double(max_dimension(k).dim);
    CHECK(vk_lower(k) <= dim);
    CHECK(dim <= std::exp(0.5 * std::lgamma(static_cast<double>(k) + 1.0)) *
                     (1.0 + 1e-12));
  }
}

TEST_CASE("bound table rows") {
  std::vector<BoundRow> rows = bound_table(8, 11);
  REQUIRE(rows.size() == 4);
  const long long dims[] = {90, 216, 768, 2310};
  const long long thresholds[] = {46, 62, 86, 114};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].k == 8 + static_cast<int>(i));
    CHECK(rows[i].dim_max == dims[i]);
    CHECK(rows[i].threshold == thresholds[i]);
    CHECK(rows[i].eq4_holds);
  }

  // the inequality fails below k = 7 and holds from there on
  CHECK_FALSE(inequality_check(5).eq4_holds);  // 6 < 16
  CHECK_FALSE(inequality_check(6).eq4_holds);  // 16 < 24
  CHECK(inequality_check(7).eq4_holds);        // 35 >= 32
  for (int k = 8; k <= 60; ++k) CHECK(inequality_check(k).eq4_holds);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(vk_lower(0), ValidationError);
  CHECK_THROWS_AS(hr_upper(-3), ValidationError);
  CHECK_THROWS_AS(r_ratio(0), ValidationError);
  CHECK_THROWS_AS(inequality_check(0), SizeLimitError);
  CHECK_THROWS_AS(inequality_check(61), SizeLimitError);
  CHECK_THROWS_AS(bound_table(9, 8), SizeLimitError);
  CHECK_THROWS_AS(bound_table(0, 5), SizeLimitError);
}
