#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gelfand/character_table.hpp"
#include "gelfand/crack.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/oracle.hpp"

using namespace gelfand;

TEST_CASE("explicit small groups satisfy the axioms") {
  ExplicitGroup s3 = small_group(SmallGroupKind::symmetric, 3);
  CHECK(s3.size == 6);
  CHECK_NOTHROW(s3.check_axioms(500, 42));
  // closure and cancellation: every row of the Cayley table is a permutation
  for (int a = 0; a < 6; ++a) {
    std::vector<int> row;
    for (int b = 0; b < 6; ++b) row.push_back(s3.mul(a, b));
    std::sort(row.begin(), row.end());
    CHECK(row == std::vector<int>{0, 1, 2, 3, 4, 5});
  }

  ExplicitGroup c4 = small_group(SmallGroupKind::cyclic, 4);
  CHECK(c4.size == 4);
  CHECK_NOTHROW(c4.check_axioms(200, 7));
  CHECK(c4.mul(3, 2) == 1);
  CHECK(c4.inv(1) == 3);

  CHECK_THROWS_AS(small_group(SmallGroupKind::symmetric, 4), SizeLimitError);
  CHECK_THROWS_AS(small_group(SmallGroupKind::cyclic, 5), SizeLimitError);

  // a broken table is caught
  ExplicitGroup bad = c4;
  bad.inv = [](int) { return 2; };
  CHECK_THROWS_AS(bad.check_axioms(10, 1), ValidationError);
}

TEST_CASE("wreath products have the right order and subgroup") {
  WreathPair pair = build_wreath(SmallGroupKind::symmetric, 3, 3);
  CHECK(pair.group.size == 6 * 6 * 6 * 6);  // |Gamma|^3 * 3!
  CHECK(pair.gamma_size == 6);
  CHECK(pair.n == 3);
  CHECK(pair.k_members.size() == 36);  // |Delta| * |S_3|
  CHECK(std::is_sorted(pair.k_members.begin(), pair.k_members.end()));
  CHECK(pair.k_members.front() == 0);
  CHECK_NOTHROW(pair.group.check_axioms(2000, 12345));

  // K is closed under multiplication and inverses
  for (size_t i = 0; i < pair.k_members.size(); i += 7) {
    for (size_t j = 0; j < pair.k_members.size(); j += 5) {
      int prod = pair.group.mul(pair.k_members[i], pair.k_members[j]);
      CHECK(std::binary_search(pair.k_members.begin(), pair.k_members.end(),
                               prod));
    }
    CHECK(std::binary_search(pair.k_members.begin(), pair.k_members.end(),
                             pair.group.inv(pair.k_members[i])));
  }

  CHECK_THROWS_AS(build_wreath(SmallGroupKind::symmetric, 3, 4), SizeLimitError);
}

TEST_CASE("double cosets partition the group") {
  WreathPair pair = build_wreath(SmallGroupKind::cyclic, 3, 3);
  DoubleCosets dc = double_cosets(pair.group, pair.k_members);
  CHECK(dc.count == 4);
  long long covered = std::accumulate(dc.sizes.begin(), dc.sizes.end(), 0LL);
  CHECK(covered == pair.group.size);
  REQUIRE(dc.representatives.size() == static_cast<size_t>(dc.count));
  for (int b = 0; b < dc.count; ++b) {
    CHECK(dc.block[static_cast<size_t>(dc.representatives[b])] == b);
  }
  // identity's coset is K Delta K = K here
  CHECK(dc.block[0] == 0);

  const int counts[][3] = {{1, 2, 2}, {1, 2, 4}, {1, 3, 5}};
  const SmallGroupKind kinds[] = {SmallGroupKind::cyclic,
                                  SmallGroupKind::cyclic,
                                  SmallGroupKind::symmetric};
  const int params[] = {2, 3, 3};
  for (int g = 0; g < 3; ++g) {
    for (int n = 1; n <= 3; ++n) {
      WreathPair wp = build_wreath(kinds[g], params[g], n);
      CHECK(double_cosets(wp.group, wp.k_members).count == counts[g][n - 1]);
    }
  }
}

TEST_CASE("convolution commutes exactly on the Gelfand side of the fence") {
  // all nine desk-scale wreath pairs are Gelfand pairs, so the biinvariant
  // algebra must commute
  WreathPair pair = build_wreath(SmallGroupKind::symmetric, 3, 2);
  CommuteCheck check = convolution_commutes(pair.group, pair.k_members);
  CHECK(check.commutes);
  CHECK_FALSE(check.counterexample.has_value());

  // against the trivial subgroup the algebra is the full group algebra of a
  // nonabelian group: the first counterexample must be a genuine one
  ExplicitGroup s3 = small_group(SmallGroupKind::symmetric, 3);
  CommuteCheck nc = convolution_commutes(s3, {0});
  CHECK_FALSE(nc.commutes);
  REQUIRE(nc.counterexample.has_value());
  auto [i, j, x] = *nc.counterexample;
  CHECK(i < j);
  // blocks of the trivial subgroup are singletons {g}, so the scaled
  // convolution counts reduce to products in either order
  DoubleCosets dc = double_cosets(s3, {0});
  REQUIRE(dc.count == 6);
  int gi = dc.representatives[static_cast<size_t>(i)];
  int gj = dc.representatives[static_cast<size_t>(j)];
  int lhs = (s3.mul(gi, gj) == x) ? 1 : 0;
  int rhs = (s3.mul(gj, gi) == x) ? 1 : 0;
  CHECK(lhs != rhs);

  // abelian full-group-algebra case commutes
  ExplicitGroup c4 = small_group(SmallGroupKind::cyclic, 4);
  CHECK(convolution_commutes(c4, {0}).commutes);
}

TEST_CASE("oracle verdicts match the character-theoretic engine") {
  const SmallGroupKind kinds[] = {SmallGroupKind::cyclic,
                                  SmallGroupKind::cyclic,
                                  SmallGroupKind::symmetric};
  const int params[] = {2, 3, 3};
  for (int g = 0; g < 3; ++g) {
    CharacterTable table = (kinds[g] == SmallGroupKind::symmetric)
                               ? CharacterTable::symmetric(params[g])
                               : CharacterTable::cyclic(params[g]);
    for (int n = 1; n <= 2; ++n) {
      WreathPair wp = build_wreath(kinds[g], params[g], n);
      CommuteCheck check = convolution_commutes(wp.group, wp.k_members);
      GelfandReport rep = is_gelfand(table, n);
      CHECK(check.commutes == rep.gelfand);
      CHECK(BigInt(double_cosets(wp.group, wp.k_members).count) ==
            intertwiner_number(table, n));
    }
  }
}

TEST_CASE("the trace identity behind the cycle-product rule") {
  CHECK(wreath_char_check({3, 3, 3}, 100, 2024));
  CHECK(wreath_char_check({1, 1, 1}, 100, 2024));
  CHECK(wreath_char_check({1, 3, 3}, 100, 2024));
  CHECK(wreath_char_check({3}, 50, 1));
  CHECK(wreath_char_check({1, 3}, 50, 1));

  CHECK_THROWS_AS(wreath_char_check({2, 3, 3}, 10, 1), ValidationError);
  CHECK_THROWS_AS(wreath_char_check({}, 10, 1), SizeLimitError);
  CHECK_THROWS_AS(wreath_char_check({3, 3, 3, 3}, 10, 1), SizeLimitError);
  CHECK_THROWS_AS(wreath_char_check({3, 3}, 0, 1), ValidationError);
}
