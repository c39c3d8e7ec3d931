#include <doctest.h>

#include "rigidcay/conditions.hpp"
#include "rigidcay/errors.hpp"

using namespace rigidcay;

TEST_CASE("single-generator flexibility condition") {
  const auto c12 = make_cyclic(12);
  CHECK(check_flexible_condition(c12, {2, 3}, 2).holds);

  const auto c6 = make_cyclic(6);
  CHECK(check_flexible_condition(c6, {2, 3}, 2).holds);

  const auto c4 = make_cyclic(4);
  const auto report = check_flexible_condition(c4, {1, 2}, 2);
  CHECK_FALSE(report.holds);
  CHECK(report.witnesses == std::vector<int>{2});  // 2 lies in <1>

  CHECK_THROWS_AS(check_flexible_condition(c12, {2, 3}, 5), InvalidParameterError);
}

TEST_CASE("single-generator movability condition") {
  const auto c6 = make_cyclic(6);
  const auto ok = check_movable_condition(c6, {2, 3}, 2);
  CHECK(ok.holds);
  CHECK(ok.witnesses.empty());

  const auto c12 = make_cyclic(12);
  const auto bad = check_movable_condition(c12, {2, 3}, 2);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witnesses == std::vector<int>{6});  // <2> and <3> share 6

  SUBCASE("direct-product factors intersect trivially") {
    const auto prod = direct_product(make_cyclic(2), make_cyclic(3));
    const int a = product_id(prod, 1, 0);
    const int b = product_id(prod, 0, 1);
    CHECK(check_movable_condition(prod, {a, b}, a).holds);
  }
}

TEST_CASE("partition condition") {
  SUBCASE("SL_2(F_3) splits into upper and lower unipotents") {
    const auto gens = elementary_generators(2, 3);
    const auto& sl = gens.group;
    const int upper = sl_transvection(sl, 0, 1);
    const int lower = sl_transvection(sl, 1, 0);
    const auto report = check_partition_condition(sl, {upper, lower}, {upper});
    CHECK(report.movable.holds);
    CHECK(report.flexible.holds);
  }

  SUBCASE("(Z/3)^2 axes") {
    const auto prod = direct_product(make_cyclic(3), make_cyclic(3));
    const int a = product_id(prod, 1, 0);
    const int b = product_id(prod, 0, 1);
    CHECK(check_partition_condition(prod, {a, b}, {a}).movable.holds);
  }

  SUBCASE("Z/12 with S1 = {2} fails with witness 6") {
    const auto c12 = make_cyclic(12);
    const auto report = check_partition_condition(c12, {2, 3}, {2});
    CHECK(report.flexible.holds);
    CHECK_FALSE(report.movable.holds);
    CHECK(report.movable.witnesses == std::vector<int>{6});
  }

  SUBCASE("degenerate partitions are rejected") {
    const auto c12 = make_cyclic(12);
    CHECK_THROWS_AS(check_partition_condition(c12, {2, 3}, {}), InvalidPartitionError);
    CHECK_THROWS_AS(check_partition_condition(c12, {2, 3}, {2, 3}), InvalidPartitionError);
    CHECK_THROWS_AS(check_partition_condition(c12, {2, 3}, {5}), InvalidPartitionError);
    // removing {s, s^-1} may empty the second class even when S1 != S
    CHECK_THROWS_AS(check_partition_condition(c12, {2, 10}, {2}), InvalidPartitionError);
  }
}

TEST_CASE("pairwise trivial intersections") {
  CHECK(check_pairwise_trivial(make_cyclic(6), {2, 3}).holds);
  CHECK(check_pairwise_trivial(make_cyclic(15), {3, 5}).holds);

  const auto bad = check_pairwise_trivial(make_cyclic(12), {2, 3});
  CHECK_FALSE(bad.holds);
  CHECK(bad.witnesses == std::vector<int>{6});

  CHECK_THROWS_AS(check_pairwise_trivial(make_cyclic(6), {2}), InvalidParameterError);
}
