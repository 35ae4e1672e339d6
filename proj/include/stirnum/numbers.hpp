#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirnum {

// Exact arbitrary-precision integers. Count holds quantities that are
// nonnegative by construction (triangle entries, enumeration totals);
// SignedValue holds anything that can carry a sign. No rounding ever occurs.
using Count = boost::multiprecision::cpp_int;
using SignedValue = boost::multiprecision::cpp_int;

// Default cap on triangle rows for table construction and sweeps. Callers
// with a genuine need may pass a larger cap explicitly.
inline constexpr std::int64_t default_row_cap = 500;

// Thrown when a request exceeds a configured resource cap. Distinct from
// std::domain_error so callers can tell "too big" from "mathematically
// invalid".
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

enum class TriangleFamily {
  binomial,
  stirling_first_unsigned,
  stirling_second,
};

std::string_view family_name(TriangleFamily family);
std::optional<TriangleFamily> parse_family(std::string_view name);

// Immutable dense lower-triangular table of one counting family, rows
// 0..n_max. Built once, then safe for unlimited concurrent readers.
class TriangleTable {
 public:
  // Takes ownership of explicit rows; row n must have exactly n+1 entries.
  // Shape is validated, entry values are not (so tables with deliberately
  // wrong entries can be constructed for sensitivity tests).
  TriangleTable(TriangleFamily family, std::vector<std::vector<Count>> rows);

  TriangleFamily family() const noexcept { return family_; }
  std::int64_t n_max() const noexcept {
    return static_cast<std::int64_t>(rows_.size()) - 1;
  }

  // Zero-extension: n < 0, k < 0 or k > n answer 0 without table access.
  // n > n_max is a caller error (the value exists but is not stored) and
  // throws std::out_of_range.
  const Count& entry(std::int64_t n, std::int64_t k) const;

  const std::vector<Count>& row(std::int64_t n) const;

  // Copy of this table with entry (n, k) replaced; requires 0 <= k <= n <= n_max.
  TriangleTable with_entry(std::int64_t n, std::int64_t k, Count value) const;

 private:
  TriangleFamily family_;
  std::vector<std::vector<Count>> rows_;
};

// Fully populated table with rows 0..n_max, computed by the family's triangle
// recurrence. Throws ResourceLimitError when n_max > row_cap.
TriangleTable build_triangle(TriangleFamily family, std::int64_t n_max,
                             std::int64_t row_cap = default_row_cap);

// Scalar operations. All reject n < 0 with std::domain_error and answer 0
// for k outside 0..n.
Count binomial(std::int64_t n, std::int64_t k);
Count stirling_second(std::int64_t n, std::int64_t k);
Count stirling_first_unsigned(std::int64_t n, std::int64_t k);

// Signed first kind: (-1)^(n-k) times the unsigned value.
SignedValue stirling_first_signed(std::int64_t n, std::int64_t k);

Count factorial(std::int64_t n);

// n-th Bell number via the Bell-triangle (Aitken) recurrence. Deliberately
// independent of stirling_second so that row-sum comparisons against the
// second-kind triangle are a genuine cross-check.
Count bell_number(std::int64_t n);

}  // namespace stirnum
