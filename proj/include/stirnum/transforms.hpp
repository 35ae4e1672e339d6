#pragma once

#include <cstdint>
#include <vector>

#include "stirnum/identities.hpp"
#include "stirnum/numbers.hpp"

namespace stirnum {

// Finite prefix a_0..a_n of an integer sequence. Both transforms below are
// lower triangular, so term n of the output depends only on terms 0..n of the
// input and the length is preserved exactly.
using IntegerSequence = std::vector<SignedValue>;

// a_n = sum over k of [n,k] (-1)^(n-k) b_k. Inverse of the second-kind
// transform.
IntegerSequence stirling_first_signed_transform(const IntegerSequence& b);

// b_n = sum over k of {n,k} a_k. Inverse of the signed first-kind transform.
IntegerSequence stirling_second_transform(const IntegerSequence& a);

// True iff composing the two transforms in either order reproduces s exactly.
bool verify_inversion_roundtrip(const IntegerSequence& s);

// Two-step derivation replay for a fixed column parameter p:
//   b_k = (-1)^k C(k,p),  a_n = (-1)^n [n+1,p+1]
// Step 1 checks that the signed first-kind transform of b equals a term by
// term (the row-addition identity for the first kind, resigned). Step 2
// checks that the second-kind transform of a recovers b (identity I2).
struct ProofReplayReport {
  CheckReport step1;  // tagged Add10
  CheckReport step2;  // tagged I2
  bool passed() const { return step1.passed && step2.passed; }
};

// Requires 0 <= p <= n_max.
ProofReplayReport replay_proof_identity_2(std::int64_t p, std::int64_t n_max);

}  // namespace stirnum
