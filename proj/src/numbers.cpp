#include "stirnum/numbers.hpp"

#include <utility>

namespace stirnum {

namespace {

const Count zero_count{0};

void require_nonnegative(std::int64_t n, const char* op) {
  if (n < 0) {
    throw std::domain_error(std::string(op) + ": n must be nonnegative, got " +
                            std::to_string(n));
  }
}

// Rows 0..n_max of one family by its triangle recurrence.
std::vector<std::vector<Count>> recurrence_rows(TriangleFamily family,
                                                std::int64_t n_max) {
  std::vector<std::vector<Count>> rows(static_cast<std::size_t>(n_max) + 1);
  rows[0] = {Count(1)};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto& prev = rows[n - 1];
    auto& row = rows[n];
    row.assign(static_cast<std::size_t>(n) + 1, Count(0));
    if (family == TriangleFamily::binomial) {
      row[0] = 1;
    }
    for (std::int64_t k = 1; k <= n; ++k) {
      const Count& diag = prev[k - 1];
      const Count& up = (k <= n - 1) ? prev[k] : zero_count;
      switch (family) {
        case TriangleFamily::binomial:
          row[k] = diag + up;
          break;
        case TriangleFamily::stirling_first_unsigned:
          row[k] = diag + (n - 1) * up;
          break;
        case TriangleFamily::stirling_second:
          row[k] = diag + k * up;
          break;
      }
    }
  }
  return rows;
}

// Row n of one family, O(n) memory. Shared backend of the scalar operations.
std::vector<Count> recurrence_row(TriangleFamily family, std::int64_t n) {
  std::vector<Count> row{Count(1)};
  for (std::int64_t m = 1; m <= n; ++m) {
    std::vector<Count> next(static_cast<std::size_t>(m) + 1, Count(0));
    if (family == TriangleFamily::binomial) {
      next[0] = 1;
    }
    for (std::int64_t k = 1; k <= m; ++k) {
      const Count& diag = row[k - 1];
      const Count& up = (k <= m - 1) ? row[k] : zero_count;
      switch (family) {
        case TriangleFamily::binomial:
          next[k] = diag + up;
          break;
        case TriangleFamily::stirling_first_unsigned:
          next[k] = diag + (m - 1) * up;
          break;
        case TriangleFamily::stirling_second:
          next[k] = diag + k * up;
          break;
      }
    }
    row = std::move(next);
  }
  return row;
}

Count scalar_entry(TriangleFamily family, std::int64_t n, std::int64_t k,
                   const char* op) {
  require_nonnegative(n, op);
  if (k < 0 || k > n) return 0;
  return recurrence_row(family, n)[static_cast<std::size_t>(k)];
}

}  // namespace

std::string_view family_name(TriangleFamily family) {
  switch (family) {
    case TriangleFamily::binomial:
      return "binomial";
    case TriangleFamily::stirling_first_unsigned:
      return "stirling_first_unsigned";
    case TriangleFamily::stirling_second:
      return "stirling_second";
  }
  return "unknown";
}

std::optional<TriangleFamily> parse_family(std::string_view name) {
  if (name == "binomial") return TriangleFamily::binomial;
  if (name == "stirling_first_unsigned") {
    return TriangleFamily::stirling_first_unsigned;
  }
  if (name == "stirling_second") return TriangleFamily::stirling_second;
  return std::nullopt;
}

TriangleTable::TriangleTable(TriangleFamily family,
                             std::vector<std::vector<Count>> rows)
    : family_(family), rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw std::invalid_argument("TriangleTable: rows must not be empty");
  }
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw std::invalid_argument("TriangleTable: row " + std::to_string(n) +
                                  " must have " + std::to_string(n + 1) +
                                  " entries");
    }
  }
}

const Count& TriangleTable::entry(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n) return zero_count;
  if (n > n_max()) {
    throw std::out_of_range("TriangleTable::entry: n=" + std::to_string(n) +
                            " beyond n_max=" + std::to_string(n_max()));
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<Count>& TriangleTable::row(std::int64_t n) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("TriangleTable::row: n=" + std::to_string(n) +
                            " outside 0.." + std::to_string(n_max()));
  }
  return rows_[static_cast<std::size_t>(n)];
}

TriangleTable TriangleTable::with_entry(std::int64_t n, std::int64_t k,
                                        Count value) const {
  if (n < 0 || n > n_max() || k < 0 || k > n) {
    throw std::domain_error("TriangleTable::with_entry: (" + std::to_string(n) +
                            ", " + std::to_string(k) + ") not in table");
  }
  std::vector<std::vector<Count>> rows = rows_;
  rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
      std::move(value);
  return TriangleTable(family_, std::move(rows));
}

TriangleTable build_triangle(TriangleFamily family, std::int64_t n_max,
                             std::int64_t row_cap) {
  require_nonnegative(n_max, "build_triangle");
  if (n_max > row_cap) {
    throw ResourceLimitError("build_triangle: n_max=" + std::to_string(n_max) +
                             " exceeds row cap " + std::to_string(row_cap));
  }
  return TriangleTable(family, recurrence_rows(family, n_max));
}

Count binomial(std::int64_t n, std::int64_t k) {
  return scalar_entry(TriangleFamily::binomial, n, k, "binomial");
}

Count stirling_second(std::int64_t n, std::int64_t k) {
  return scalar_entry(TriangleFamily::stirling_second, n, k, "stirling_second");
}

Count stirling_first_unsigned(std::int64_t n, std::int64_t k) {
  return scalar_entry(TriangleFamily::stirling_first_unsigned, n, k,
                      "stirling_first_unsigned");
}

SignedValue stirling_first_signed(std::int64_t n, std::int64_t k) {
  SignedValue value = stirling_first_unsigned(n, k);
  return ((n - k) % 2 != 0) ? -value : value;
}

Count factorial(std::int64_t n) {
  require_nonnegative(n, "factorial");
  Count result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Count bell_number(std::int64_t n) {
  require_nonnegative(n, "bell_number");
  // Aitken array: row 0 is {1}; each later row starts with the previous
  // row's last entry and accumulates leftward neighbours. Bell(n) is the
  // first entry of row n.
  std::vector<Count> row{Count(1)};
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<Count> next;
    next.reserve(static_cast<std::size_t>(i) + 1);
    next.push_back(row.back());
    for (const Count& above : row) next.push_back(next.back() + above);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace stirnum
