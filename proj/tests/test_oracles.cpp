#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stirnum/numbers.hpp"
#include "stirnum/oracles.hpp"

using namespace stirnum;

TEST_CASE("set partition counts by enumeration") {
  CHECK(count_set_partitions(0, 0) == 1);
  CHECK(count_set_partitions(0, 1) == 0);
  CHECK(count_set_partitions(3, 2) == 3);
  CHECK(count_set_partitions(5, 5) == 1);
  CHECK(count_set_partitions(4, 0) == 0);
  CHECK(count_set_partitions(4, 9) == 0);
}

TEST_CASE("permutation cycle counts by enumeration") {
  CHECK(count_permutations_by_cycles(0, 0) == 1);
  CHECK(count_permutations_by_cycles(0, 1) == 0);
  CHECK(count_permutations_by_cycles(3, 1) == 2);
  CHECK(count_permutations_by_cycles(4, 4) == 1);
  CHECK(count_permutations_by_cycles(4, 0) == 0);
}

TEST_CASE("subset counts by enumeration") {
  CHECK(count_subsets(0, 0) == 1);
  CHECK(count_subsets(4, 2) == 6);
  CHECK(count_subsets(6, 6) == 1);
  CHECK(count_subsets(5, 7) == 0);
}

TEST_CASE("cycle totals reach n!") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    Count total = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      total += count_permutations_by_cycles(n, k);
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("partition totals reach bell numbers") {
  for (std::int64_t n = 0; n <= 10; ++n) {
    Count total = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      total += count_set_partitions(n, k);
    }
    CHECK(total == bell_number(n));
  }
}

TEST_CASE("subset totals reach 2^n") {
  for (std::int64_t n = 0; n <= 15; ++n) {
    Count total = 0;
    for (std::int64_t k = 0; k <= n; ++k) total += count_subsets(n, k);
    CHECK(total == Count(1) << n);
  }
}

TEST_CASE("oracles agree with the recurrence triangles") {
  for (std::int64_t n = 0; n <= 9; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(count_set_partitions(n, k) == stirling_second(n, k));
    }
  }
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(count_permutations_by_cycles(n, k) ==
            stirling_first_unsigned(n, k));
    }
  }
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(count_subsets(n, k) == binomial(n, k));
    }
  }
}

TEST_CASE("caps are hard preconditions") {
  CHECK_THROWS_AS(count_set_partitions(13, 2), ResourceLimitError);
  CHECK_THROWS_AS(count_permutations_by_cycles(10, 2), ResourceLimitError);
  CHECK_THROWS_AS(count_subsets(21, 2), ResourceLimitError);
  CHECK_NOTHROW(count_set_partitions(12, 2));
  CHECK_NOTHROW(count_subsets(20, 2));
}

TEST_CASE("negative arguments are rejected") {
  CHECK_THROWS_AS(count_set_partitions(-1, 0), std::domain_error);
  CHECK_THROWS_AS(count_set_partitions(3, -1), std::domain_error);
  CHECK_THROWS_AS(count_permutations_by_cycles(-2, 1), std::domain_error);
  CHECK_THROWS_AS(count_subsets(4, -3), std::domain_error);
}
