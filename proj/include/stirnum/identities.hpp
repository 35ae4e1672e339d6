#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "stirnum/numbers.hpp"

namespace stirnum {

// The checkable relations between the three counting triangles. I1..I6 are
// the alternating mixed sums, ORTHO7/ORTHO7P the two orthogonality forms,
// ADD9/ADD10 the row-addition identities.
enum class IdentityId { I1, I2, I3, I4, I5, I6, Ortho7, Ortho7P, Add9, Add10 };

// Fixed expansion order of the "all" selector; also the rendering order.
constexpr std::array<IdentityId, 10> all_identities() {
  return {IdentityId::I1,     IdentityId::I2,      IdentityId::I3,
          IdentityId::I4,     IdentityId::I5,      IdentityId::I6,
          IdentityId::Ortho7, IdentityId::Ortho7P, IdentityId::Add9,
          IdentityId::Add10};
}

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

// The two orthogonality relations come in a first-kind-major and a
// second-kind-major form, each with a plain and a resigned variant.
enum class OrthoVariant { eq7_first, eq7_second, eq7prime_first, eq7prime_second };

struct SideValues {
  SignedValue lhs;
  SignedValue rhs;
};

struct Counterexample {
  std::int64_t n = 0;
  std::optional<std::int64_t> p;  // absent for the single-parameter identities
  SideValues sides;
};

// Outcome of exhaustively evaluating one identity over a range.
struct CheckReport {
  IdentityId identity{};
  std::int64_t range_n_max = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t cases_checked = 0;
};

// The three triangles bundled to a common n_max, the working set of every
// identity evaluation. Immutable; cheap to query (entries by reference).
class TriangleSet {
 public:
  TriangleSet(TriangleTable binomial_table, TriangleTable first_kind_table,
              TriangleTable second_kind_table);

  static TriangleSet build(std::int64_t n_max,
                           std::int64_t row_cap = default_row_cap);

  std::int64_t n_max() const noexcept { return binomial_.n_max(); }

  const Count& binomial(std::int64_t n, std::int64_t k) const {
    return binomial_.entry(n, k);
  }
  const Count& stirling_first(std::int64_t n, std::int64_t k) const {
    return first_kind_.entry(n, k);
  }
  const Count& stirling_second(std::int64_t n, std::int64_t k) const {
    return second_kind_.entry(n, k);
  }
  SignedValue stirling_first_signed(std::int64_t n, std::int64_t k) const;

  const TriangleTable& table(TriangleFamily family) const;

  // Copy of this set with the table of the replacement's family swapped out.
  TriangleSet with_table(TriangleTable replacement) const;

 private:
  TriangleTable binomial_;
  TriangleTable first_kind_;
  TriangleTable second_kind_;
};

// Each evaluator returns both sides of its identity, exactly. Sums always run
// over the full 0..n index range and rely on zero-extension for vanishing
// terms. Preconditions are enforced with std::domain_error; the tables must
// cover every row the identity touches (n+1 for those that shift a row up).
SideValues eval_identity_1(const TriangleSet& t, std::int64_t n, std::int64_t p);
SideValues eval_identity_2(const TriangleSet& t, std::int64_t n, std::int64_t p);
SideValues eval_identity_3(const TriangleSet& t, std::int64_t n);
SideValues eval_identity_4(const TriangleSet& t, std::int64_t n);
SideValues eval_identity_5(const TriangleSet& t, std::int64_t n, std::int64_t p);
SideValues eval_identity_6(const TriangleSet& t, std::int64_t n, std::int64_t p);
SideValues eval_orthogonality(const TriangleSet& t, std::int64_t n,
                              std::int64_t p, OrthoVariant variant);
SideValues eval_addition_9(const TriangleSet& t, std::int64_t n, std::int64_t p);
SideValues eval_addition_10(const TriangleSet& t, std::int64_t n, std::int64_t p);

// Exhaustive sweep of one identity over every admissible case with n <= n_max
// (p <= n for the pair identities, p <= n+1 for I5/I6, both orthogonality
// variants per pair). Pure and deterministic: cases run in lexicographic
// (n, p, variant) order and the first failure, if any, is reported. The
// tables must cover rows 0..n_max+1.
CheckReport sweep(IdentityId id, std::int64_t n_max, const TriangleSet& tables);

// Convenience form that builds its own tables. Throws ResourceLimitError when
// n_max exceeds row_cap.
CheckReport sweep(IdentityId id, std::int64_t n_max,
                  std::int64_t row_cap = default_row_cap);

}  // namespace stirnum
