#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stirnum/numbers.hpp"
#include "stirnum/oracles.hpp"

using namespace stirnum;

TEST_CASE("binomial scalar values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(4, 2) == count_subsets(4, 2));
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("stirling second scalar values") {
  CHECK(stirling_second(0, 0) == 1);
  CHECK(stirling_second(3, 0) == 0);
  CHECK(stirling_second(4, 2) == count_set_partitions(4, 2));
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(2, 5) == 0);
}

TEST_CASE("stirling first unsigned scalar values") {
  CHECK(stirling_first_unsigned(0, 0) == 1);
  CHECK(stirling_first_unsigned(2, 5) == 0);
  CHECK(stirling_first_unsigned(4, 2) == count_permutations_by_cycles(4, 2));
  CHECK(stirling_first_unsigned(4, 2) == 11);
  CHECK(stirling_first_unsigned(3, 0) == 0);
}

TEST_CASE("stirling first signed applies the parity sign") {
  CHECK(stirling_first_signed(0, 0) == 1);
  CHECK(stirling_first_signed(3, 1) == 2);
  CHECK(stirling_first_signed(3, 2) == -3);
  CHECK(stirling_first_signed(5, 9) == 0);
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const SignedValue expected = ((n - k) % 2 != 0)
                                       ? SignedValue(-stirling_first_unsigned(n, k))
                                       : SignedValue(stirling_first_unsigned(n, k));
      CHECK(stirling_first_signed(n, k) == expected);
    }
  }
}

TEST_CASE("negative n is rejected everywhere") {
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
  CHECK_THROWS_AS(stirling_second(-2, 0), std::domain_error);
  CHECK_THROWS_AS(stirling_first_unsigned(-1, 1), std::domain_error);
  CHECK_THROWS_AS(stirling_first_signed(-3, 0), std::domain_error);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
  CHECK_THROWS_AS(bell_number(-1), std::domain_error);
  CHECK_THROWS_AS(build_triangle(TriangleFamily::binomial, -1),
                  std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  Count total = 0;
  for (std::int64_t k = 0; k <= 5; ++k) {
    total += count_permutations_by_cycles(5, k);
  }
  CHECK(factorial(5) == total);
}

TEST_CASE("bell numbers by the Aitken recurrence") {
  const Count expected[]{1, 1, 2, 5, 15, 52, 203};
  for (std::int64_t n = 0; n <= 6; ++n) CHECK(bell_number(n) == expected[n]);

  Count partitions_of_four = 0;
  for (std::int64_t k = 0; k <= 4; ++k) {
    partitions_of_four += count_set_partitions(4, k);
  }
  CHECK(bell_number(4) == partitions_of_four);
}

TEST_CASE("row sums match factorial and bell up to 40") {
  for (std::int64_t n = 0; n <= 40; ++n) {
    Count first_sum = 0;
    Count second_sum = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      first_sum += stirling_first_unsigned(n, k);
      second_sum += stirling_second(n, k);
    }
    CHECK(first_sum == factorial(n));
    CHECK(second_sum == bell_number(n));
  }
}

TEST_CASE("binomial symmetry up to 40") {
  const TriangleTable table = build_triangle(TriangleFamily::binomial, 40);
  for (std::int64_t n = 0; n <= 40; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(table.entry(n, k) == table.entry(n, n - k));
    }
  }
}

TEST_CASE("tables agree with scalar operations") {
  const TriangleTable binom = build_triangle(TriangleFamily::binomial, 12);
  const TriangleTable first =
      build_triangle(TriangleFamily::stirling_first_unsigned, 12);
  const TriangleTable second =
      build_triangle(TriangleFamily::stirling_second, 12);
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(binom.entry(n, k) == binomial(n, k));
      CHECK(first.entry(n, k) == stirling_first_unsigned(n, k));
      CHECK(second.entry(n, k) == stirling_second(n, k));
    }
  }
}

TEST_CASE("table boundary values") {
  for (TriangleFamily family :
       {TriangleFamily::binomial, TriangleFamily::stirling_first_unsigned,
        TriangleFamily::stirling_second}) {
    const TriangleTable table = build_triangle(family, 12);
    CHECK(table.entry(0, 0) == 1);
    for (std::int64_t n = 1; n <= 12; ++n) {
      CHECK(table.entry(n, n) == 1);
      if (family == TriangleFamily::binomial) {
        CHECK(table.entry(n, 0) == 1);
      } else {
        CHECK(table.entry(n, 0) == 0);
      }
    }
  }
}

TEST_CASE("table zero-extension and out-of-range access") {
  const TriangleTable table = build_triangle(TriangleFamily::stirling_second, 6);
  CHECK(table.entry(3, 5) == 0);
  CHECK(table.entry(3, -2) == 0);
  CHECK(table.entry(-1, 0) == 0);
  CHECK_THROWS_AS(table.entry(7, 0), std::out_of_range);
  CHECK_THROWS_AS(table.row(7), std::out_of_range);
  CHECK_THROWS_AS(table.row(-1), std::out_of_range);
}

TEST_CASE("known rows") {
  const TriangleTable binom = build_triangle(TriangleFamily::binomial, 4);
  CHECK(binom.row(4) == std::vector<Count>{1, 4, 6, 4, 1});
  const TriangleTable first =
      build_triangle(TriangleFamily::stirling_first_unsigned, 4);
  CHECK(first.row(4) == std::vector<Count>{0, 6, 11, 6, 1});
  const TriangleTable single =
      build_triangle(TriangleFamily::stirling_second, 0);
  CHECK(single.n_max() == 0);
  CHECK(single.entry(0, 0) == 1);
}

TEST_CASE("row cap is enforced") {
  CHECK_THROWS_AS(build_triangle(TriangleFamily::binomial, 501),
                  ResourceLimitError);
  CHECK_THROWS_AS(build_triangle(TriangleFamily::stirling_second, 30, 10),
                  ResourceLimitError);
  CHECK_NOTHROW(build_triangle(TriangleFamily::stirling_second, 10, 10));
}

TEST_CASE("with_entry replaces a single entry in a copy") {
  const TriangleTable table = build_triangle(TriangleFamily::binomial, 5);
  const TriangleTable mutated = table.with_entry(3, 1, Count(99));
  CHECK(mutated.entry(3, 1) == 99);
  CHECK(table.entry(3, 1) == 3);
  CHECK(mutated.entry(3, 2) == table.entry(3, 2));
  CHECK_THROWS_AS(table.with_entry(6, 0, Count(1)), std::domain_error);
  CHECK_THROWS_AS(table.with_entry(2, 3, Count(1)), std::domain_error);
}

TEST_CASE("table construction validates shape") {
  std::vector<std::vector<Count>> ragged{{Count(1)}, {Count(0)}};
  CHECK_THROWS_AS(TriangleTable(TriangleFamily::binomial, std::move(ragged)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TriangleTable(TriangleFamily::binomial, {}),
                  std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (TriangleFamily family :
       {TriangleFamily::binomial, TriangleFamily::stirling_first_unsigned,
        TriangleFamily::stirling_second}) {
    CHECK(parse_family(family_name(family)) == family);
  }
  CHECK(!parse_family("pascal").has_value());
}
