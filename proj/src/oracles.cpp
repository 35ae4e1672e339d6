#include "stirnum/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace stirnum {

namespace {

void check_oracle_args(std::int64_t n, std::int64_t k, std::int64_t cap,
                       const char* op) {
  if (n < 0 || k < 0) {
    throw std::domain_error(std::string(op) + ": arguments must be nonnegative");
  }
  if (n > cap) {
    throw ResourceLimitError(std::string(op) + ": n=" + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
  }
}

// Visits every restricted-growth string of length n; prefix labels are in
// stack, blocks_used is the number of distinct labels so far.
std::uint64_t rg_count(std::int64_t length, std::int64_t position,
                       std::int64_t blocks_used, std::int64_t want_blocks) {
  if (position == length) {
    return blocks_used == want_blocks ? 1u : 0u;
  }
  std::uint64_t total = 0;
  for (std::int64_t label = 0; label <= blocks_used; ++label) {
    const std::int64_t next_blocks =
        (label == blocks_used) ? blocks_used + 1 : blocks_used;
    total += rg_count(length, position + 1, next_blocks, want_blocks);
  }
  return total;
}

std::int64_t cycle_count(const std::vector<std::int64_t>& perm) {
  std::int64_t cycles = 0;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j]);
    }
  }
  return cycles;
}

}  // namespace

Count count_set_partitions(std::int64_t n, std::int64_t k) {
  check_oracle_args(n, k, partition_oracle_cap, "count_set_partitions");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k > n) return 0;
  return rg_count(n, 0, 0, k);
}

Count count_permutations_by_cycles(std::int64_t n, std::int64_t k) {
  check_oracle_args(n, k, cycle_oracle_cap, "count_permutations_by_cycles");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k > n) return 0;
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t matches = 0;
  do {
    if (cycle_count(perm) == k) ++matches;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return matches;
}

Count count_subsets(std::int64_t n, std::int64_t k) {
  check_oracle_args(n, k, subset_oracle_cap, "count_subsets");
  if (k > n) return 0;
  std::uint64_t matches = 0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0;; ++mask) {
    if (std::popcount(mask) == k) ++matches;
    if (mask + 1 == limit) break;
  }
  return matches;
}

}  // namespace stirnum
