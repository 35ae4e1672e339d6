#include "stirnum/identities.hpp"

#include <string>
#include <utility>

namespace stirnum {

namespace {

void add_term(SignedValue& acc, const Count& a, const Count& b,
              std::int64_t sign_exponent) {
  if (a == 0 || b == 0) return;
  if (sign_exponent % 2 != 0) {
    acc -= a * b;
  } else {
    acc += a * b;
  }
}

void add_term(SignedValue& acc, const Count& a, const Count& b, const Count& c,
              std::int64_t sign_exponent) {
  if (a == 0 || b == 0 || c == 0) return;
  if (sign_exponent % 2 != 0) {
    acc -= a * b * c;
  } else {
    acc += a * b * c;
  }
}

SignedValue sign_of(std::int64_t exponent) {
  return exponent % 2 != 0 ? -1 : 1;
}

void require_pair(std::int64_t n, std::int64_t p, const char* op) {
  if (n < 0 || p < 0 || p > n) {
    throw std::domain_error(std::string(op) + ": need 0 <= p <= n, got n=" +
                            std::to_string(n) + " p=" + std::to_string(p));
  }
}

void require_shifted_pair(std::int64_t n, std::int64_t p, const char* op) {
  if (n < 0 || p < 0 || p > n + 1) {
    throw std::domain_error(std::string(op) + ": need 0 <= p <= n+1, got n=" +
                            std::to_string(n) + " p=" + std::to_string(p));
  }
}

void require_cover(const TriangleSet& t, std::int64_t need, const char* op) {
  if (t.n_max() < need) {
    throw std::invalid_argument(std::string(op) + ": tables cover rows 0.." +
                                std::to_string(t.n_max()) + " but row " +
                                std::to_string(need) + " is needed");
  }
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::I1: return "I1";
    case IdentityId::I2: return "I2";
    case IdentityId::I3: return "I3";
    case IdentityId::I4: return "I4";
    case IdentityId::I5: return "I5";
    case IdentityId::I6: return "I6";
    case IdentityId::Ortho7: return "ORTHO7";
    case IdentityId::Ortho7P: return "ORTHO7P";
    case IdentityId::Add9: return "ADD9";
    case IdentityId::Add10: return "ADD10";
  }
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : all_identities()) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

TriangleSet::TriangleSet(TriangleTable binomial_table,
                         TriangleTable first_kind_table,
                         TriangleTable second_kind_table)
    : binomial_(std::move(binomial_table)),
      first_kind_(std::move(first_kind_table)),
      second_kind_(std::move(second_kind_table)) {
  if (binomial_.family() != TriangleFamily::binomial ||
      first_kind_.family() != TriangleFamily::stirling_first_unsigned ||
      second_kind_.family() != TriangleFamily::stirling_second) {
    throw std::invalid_argument("TriangleSet: tables passed in wrong order");
  }
  if (binomial_.n_max() != first_kind_.n_max() ||
      binomial_.n_max() != second_kind_.n_max()) {
    throw std::invalid_argument("TriangleSet: tables must share one n_max");
  }
}

TriangleSet TriangleSet::build(std::int64_t n_max, std::int64_t row_cap) {
  return TriangleSet(
      build_triangle(TriangleFamily::binomial, n_max, row_cap),
      build_triangle(TriangleFamily::stirling_first_unsigned, n_max, row_cap),
      build_triangle(TriangleFamily::stirling_second, n_max, row_cap));
}

SignedValue TriangleSet::stirling_first_signed(std::int64_t n,
                                               std::int64_t k) const {
  SignedValue value = first_kind_.entry(n, k);
  return ((n - k) % 2 != 0) ? -value : value;
}

const TriangleTable& TriangleSet::table(TriangleFamily family) const {
  switch (family) {
    case TriangleFamily::binomial: return binomial_;
    case TriangleFamily::stirling_first_unsigned: return first_kind_;
    case TriangleFamily::stirling_second: return second_kind_;
  }
  throw std::invalid_argument("TriangleSet::table: bad family");
}

TriangleSet TriangleSet::with_table(TriangleTable replacement) const {
  switch (replacement.family()) {
    case TriangleFamily::binomial:
      return TriangleSet(std::move(replacement), first_kind_, second_kind_);
    case TriangleFamily::stirling_first_unsigned:
      return TriangleSet(binomial_, std::move(replacement), second_kind_);
    case TriangleFamily::stirling_second:
      return TriangleSet(binomial_, first_kind_, std::move(replacement));
  }
  throw std::invalid_argument("TriangleSet::with_table: bad family");
}

SideValues eval_identity_1(const TriangleSet& t, std::int64_t n,
                           std::int64_t p) {
  require_pair(n, p, "eval_identity_1");
  require_cover(t, n + 1, "eval_identity_1");
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    add_term(lhs, t.stirling_first(k, p), t.stirling_second(n + 1, k + 1), k);
  }
  return {std::move(lhs), t.binomial(n, p) * sign_of(p)};
}

SideValues eval_identity_2(const TriangleSet& t, std::int64_t n,
                           std::int64_t p) {
  require_pair(n, p, "eval_identity_2");
  require_cover(t, n + 1, "eval_identity_2");
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    add_term(lhs, t.stirling_first(k + 1, p + 1), t.stirling_second(n, k), k);
  }
  return {std::move(lhs), t.binomial(n, p) * sign_of(n)};
}

SideValues eval_identity_3(const TriangleSet& t, std::int64_t n) {
  if (n < 0) throw std::domain_error("eval_identity_3: n must be nonnegative");
  require_cover(t, n, "eval_identity_3");
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    for (std::int64_t j = 0; j <= k; ++j) {
      add_term(lhs, t.stirling_first(n, k), t.stirling_second(k, j),
               t.binomial(n, j), k);
    }
  }
  return {std::move(lhs), sign_of(n)};
}

SideValues eval_identity_4(const TriangleSet& t, std::int64_t n) {
  if (n < 0) throw std::domain_error("eval_identity_4: n must be nonnegative");
  require_cover(t, n, "eval_identity_4");
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    for (std::int64_t j = 0; j <= k; ++j) {
      add_term(lhs, t.stirling_second(n, k), t.stirling_first(k, j),
               t.binomial(n, j), k);
    }
  }
  return {std::move(lhs), sign_of(n)};
}

SideValues eval_identity_5(const TriangleSet& t, std::int64_t n,
                           std::int64_t p) {
  require_shifted_pair(n, p, "eval_identity_5");
  require_cover(t, n + 1, "eval_identity_5");
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    for (std::int64_t j = 0; j <= k; ++j) {
      add_term(lhs, t.binomial(n, k), t.stirling_second(k, j),
               t.stirling_first(j + 1, p), j);
    }
  }
  SignedValue rhs = (n + 1 == p) ? sign_of(n) : SignedValue(0);
  return {std::move(lhs), std::move(rhs)};
}

SideValues eval_identity_6(const TriangleSet& t, std::int64_t n,
                           std::int64_t p) {
  require_shifted_pair(n, p, "eval_identity_6");
  require_cover(t, n + 1, "eval_identity_6");
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    for (std::int64_t j = 0; j <= k; ++j) {
      add_term(lhs, t.stirling_first(n, k), t.binomial(k, j),
               t.stirling_second(j + 1, p), j);
    }
  }
  SignedValue rhs = (n + 1 == p) ? sign_of(n) : SignedValue(0);
  return {std::move(lhs), std::move(rhs)};
}

SideValues eval_orthogonality(const TriangleSet& t, std::int64_t n,
                              std::int64_t p, OrthoVariant variant) {
  require_pair(n, p, "eval_orthogonality");
  require_cover(t, n, "eval_orthogonality");
  const bool first_kind_major = (variant == OrthoVariant::eq7_first ||
                                 variant == OrthoVariant::eq7prime_first);
  const bool resigned = (variant == OrthoVariant::eq7prime_first ||
                         variant == OrthoVariant::eq7prime_second);
  SignedValue lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Count& a =
        first_kind_major ? t.stirling_first(n, k) : t.stirling_second(n, k);
    const Count& b =
        first_kind_major ? t.stirling_second(k, p) : t.stirling_first(k, p);
    add_term(lhs, a, b, resigned ? k : n - k);
  }
  SignedValue rhs = 0;
  if (n == p) rhs = resigned ? sign_of(n) : SignedValue(1);
  return {std::move(lhs), std::move(rhs)};
}

SideValues eval_addition_9(const TriangleSet& t, std::int64_t n,
                           std::int64_t p) {
  require_pair(n, p, "eval_addition_9");
  require_cover(t, n + 1, "eval_addition_9");
  SignedValue rhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    add_term(rhs, t.binomial(n, k), t.stirling_second(k, p), 0);
  }
  return {SignedValue(t.stirling_second(n + 1, p + 1)), std::move(rhs)};
}

SideValues eval_addition_10(const TriangleSet& t, std::int64_t n,
                            std::int64_t p) {
  require_pair(n, p, "eval_addition_10");
  require_cover(t, n + 1, "eval_addition_10");
  SignedValue rhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    add_term(rhs, t.stirling_first(n, k), t.binomial(k, p), 0);
  }
  return {SignedValue(t.stirling_first(n + 1, p + 1)), std::move(rhs)};
}

CheckReport sweep(IdentityId id, std::int64_t n_max,
                  const TriangleSet& tables) {
  if (n_max < 0) throw std::domain_error("sweep: n_max must be nonnegative");
  require_cover(tables, n_max + 1, "sweep");

  CheckReport report;
  report.identity = id;
  report.range_n_max = n_max;

  // Returns false on the first mismatch, freezing the counterexample.
  const auto check_case = [&report](std::int64_t n,
                                    std::optional<std::int64_t> p,
                                    SideValues sides) {
    ++report.cases_checked;
    if (sides.lhs != sides.rhs) {
      report.passed = false;
      report.counterexample = Counterexample{n, p, std::move(sides)};
      return false;
    }
    return true;
  };

  switch (id) {
    case IdentityId::I1:
    case IdentityId::I2:
    case IdentityId::Add9:
    case IdentityId::Add10: {
      const auto eval = (id == IdentityId::I1)     ? eval_identity_1
                        : (id == IdentityId::I2)   ? eval_identity_2
                        : (id == IdentityId::Add9) ? eval_addition_9
                                                   : eval_addition_10;
      for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t p = 0; p <= n; ++p) {
          if (!check_case(n, p, eval(tables, n, p))) return report;
        }
      }
      break;
    }
    case IdentityId::I3:
    case IdentityId::I4: {
      const auto eval =
          (id == IdentityId::I3) ? eval_identity_3 : eval_identity_4;
      for (std::int64_t n = 0; n <= n_max; ++n) {
        if (!check_case(n, std::nullopt, eval(tables, n))) return report;
      }
      break;
    }
    case IdentityId::I5:
    case IdentityId::I6: {
      const auto eval =
          (id == IdentityId::I5) ? eval_identity_5 : eval_identity_6;
      for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t p = 0; p <= n + 1; ++p) {
          if (!check_case(n, p, eval(tables, n, p))) return report;
        }
      }
      break;
    }
    case IdentityId::Ortho7:
    case IdentityId::Ortho7P: {
      const auto first = (id == IdentityId::Ortho7)
                             ? OrthoVariant::eq7_first
                             : OrthoVariant::eq7prime_first;
      const auto second = (id == IdentityId::Ortho7)
                              ? OrthoVariant::eq7_second
                              : OrthoVariant::eq7prime_second;
      for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t p = 0; p <= n; ++p) {
          if (!check_case(n, p, eval_orthogonality(tables, n, p, first))) {
            return report;
          }
          if (!check_case(n, p, eval_orthogonality(tables, n, p, second))) {
            return report;
          }
        }
      }
      break;
    }
  }
  return report;
}

CheckReport sweep(IdentityId id, std::int64_t n_max, std::int64_t row_cap) {
  if (n_max < 0) throw std::domain_error("sweep: n_max must be nonnegative");
  if (n_max > row_cap) {
    throw ResourceLimitError("sweep: n_max=" + std::to_string(n_max) +
                             " exceeds row cap " + std::to_string(row_cap));
  }
  return sweep(id, n_max, TriangleSet::build(n_max + 1, n_max + 1));
}

}  // namespace stirnum
