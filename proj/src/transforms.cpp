#include "stirnum/transforms.hpp"

#include <string>
#include <utility>

namespace stirnum {

namespace {

void require_nonempty(const IntegerSequence& s, const char* op) {
  if (s.empty()) {
    throw std::domain_error(std::string(op) + ": sequence must be non-empty");
  }
}

}  // namespace

IntegerSequence stirling_first_signed_transform(const IntegerSequence& b) {
  require_nonempty(b, "stirling_first_signed_transform");
  const std::int64_t n_max = static_cast<std::int64_t>(b.size()) - 1;
  const TriangleTable first =
      build_triangle(TriangleFamily::stirling_first_unsigned, n_max, n_max);
  IntegerSequence out(b.size());
  for (std::int64_t n = 0; n <= n_max; ++n) {
    SignedValue acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      const Count& coeff = first.entry(n, k);
      if (coeff == 0 || b[static_cast<std::size_t>(k)] == 0) continue;
      if ((n - k) % 2 != 0) {
        acc -= coeff * b[static_cast<std::size_t>(k)];
      } else {
        acc += coeff * b[static_cast<std::size_t>(k)];
      }
    }
    out[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return out;
}

IntegerSequence stirling_second_transform(const IntegerSequence& a) {
  require_nonempty(a, "stirling_second_transform");
  const std::int64_t n_max = static_cast<std::int64_t>(a.size()) - 1;
  const TriangleTable second =
      build_triangle(TriangleFamily::stirling_second, n_max, n_max);
  IntegerSequence out(a.size());
  for (std::int64_t n = 0; n <= n_max; ++n) {
    SignedValue acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      const Count& coeff = second.entry(n, k);
      if (coeff == 0 || a[static_cast<std::size_t>(k)] == 0) continue;
      acc += coeff * a[static_cast<std::size_t>(k)];
    }
    out[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return out;
}

bool verify_inversion_roundtrip(const IntegerSequence& s) {
  require_nonempty(s, "verify_inversion_roundtrip");
  return stirling_second_transform(stirling_first_signed_transform(s)) == s &&
         stirling_first_signed_transform(stirling_second_transform(s)) == s;
}

ProofReplayReport replay_proof_identity_2(std::int64_t p, std::int64_t n_max) {
  if (p < 0 || n_max < 0 || p > n_max) {
    throw std::domain_error("replay_proof_identity_2: need 0 <= p <= n_max, "
                            "got p=" + std::to_string(p) +
                            " n_max=" + std::to_string(n_max));
  }

  const TriangleSet tables = TriangleSet::build(n_max + 1, n_max + 1);
  IntegerSequence b(static_cast<std::size_t>(n_max) + 1);
  IntegerSequence a(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t k = 0; k <= n_max; ++k) {
    const SignedValue sign = (k % 2 != 0) ? -1 : 1;
    b[static_cast<std::size_t>(k)] = sign * tables.binomial(k, p);
    a[static_cast<std::size_t>(k)] = sign * tables.stirling_first(k + 1, p + 1);
  }

  const auto compare = [p, n_max](IdentityId tag, const IntegerSequence& got,
                                  const IntegerSequence& want) {
    CheckReport report;
    report.identity = tag;
    report.range_n_max = n_max;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      ++report.cases_checked;
      const auto i = static_cast<std::size_t>(n);
      if (got[i] != want[i]) {
        report.passed = false;
        report.counterexample =
            Counterexample{n, p, SideValues{got[i], want[i]}};
        break;
      }
    }
    return report;
  };

  ProofReplayReport report;
  report.step1 =
      compare(IdentityId::Add10, stirling_first_signed_transform(b), a);
  report.step2 = compare(IdentityId::I2, stirling_second_transform(a), b);
  return report;
}

}  // namespace stirnum
