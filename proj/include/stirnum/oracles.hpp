#pragma once

#include <cstdint>

#include "stirnum/numbers.hpp"

namespace stirnum {

// Definition-level enumeration oracles. Intentionally naive: each one counts
// the combinatorial objects directly, so a result is trustworthy independent
// of any recurrence. Hard caps keep the enumerations bounded; exceeding a cap
// throws ResourceLimitError rather than degrading silently.
inline constexpr std::int64_t partition_oracle_cap = 12;
inline constexpr std::int64_t cycle_oracle_cap = 9;
inline constexpr std::int64_t subset_oracle_cap = 20;

// Partitions of {1..n} into exactly k nonempty blocks, counted by enumerating
// restricted-growth strings (duplicate-free by construction). (0, 0) counts
// the empty partition as 1.
Count count_set_partitions(std::int64_t n, std::int64_t k);

// Permutations of n elements with exactly k cycles, counted by enumerating
// all n! permutations in one-line notation and decomposing each into cycles.
Count count_permutations_by_cycles(std::int64_t n, std::int64_t k);

// k-element subsets of an n-set, counted by enumerating subsets.
Count count_subsets(std::int64_t n, std::int64_t k);

}  // namespace stirnum
