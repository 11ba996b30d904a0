#pragma once

// Mechanised refutation of candidate automata for the word problem of the
// free monogenic inverse semigroup over {x, X}.
//
// Every such automaton must accept (x^n X^n x^n, x^n). Once n exceeds the
// number of states, an accepting run repeats a state while reading the X
// block of the first tape; running that loop twice gives an accepted pair
// (x^n X^(n+i) x^n, x^(n+j)) with i >= 1, whose sides evaluate to
// (-i, n, n-i) and (0, n+j, n+j), which differ.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "rwp/afsa.hpp"
#include "rwp/algebra/free_inverse.hpp"

namespace rwp {

  enum class WitnessKind {
    rejected_valid_pair,   // equal in FI, rejected by the automaton
    accepted_invalid_pair  // accepted, but different in FI
  };

  struct RefutationWitness {
    WitnessKind                kind;
    WordPair                   pair;
    std::size_t                n;
    std::optional<std::size_t> i;  // accepted_invalid_pair only
    std::optional<std::size_t> j;  // accepted_invalid_pair only
    FreeInverseTriple          lhs;
    FreeInverseTriple          rhs;

    bool operator==(RefutationWitness const&) const = default;
  };

  // (x^n X^n x^n, x^n); both sides are (0, n, n).
  [[nodiscard]] WordPair fi_valid_pair(std::size_t n);

  struct RefutationOutcome {
    RefutationWitness                witness;
    std::optional<LoopDecomposition> loop;  // set for accepted_invalid_pair
  };

  // n defaults to |states| + 1. With a smaller n the loop may not exist, in
  // which case inconclusive_error is thrown. Throws input_error unless the
  // alphabet is exactly {x, X}.
  [[nodiscard]] RefutationOutcome
  analyze_fi_recognizer(Afsa const& afsa, std::optional<std::size_t> n = {});

  [[nodiscard]] RefutationWitness
  refute_fi_recognizer(Afsa const& afsa, std::optional<std::size_t> n = {});

  // Rechecks a witness from scratch: acceptance through the automaton and
  // values through the walk evaluation (never fi_mul).
  [[nodiscard]] bool verify_witness(Afsa const& afsa, RefutationWitness const& w);

  // Key-value document with keys kind, u, v, n, i, j, lhs, rhs; i and j are
  // omitted for rejected valid pairs.
  [[nodiscard]] std::string       serialize_witness(RefutationWitness const& w);
  [[nodiscard]] RefutationWitness parse_witness(std::string_view text);

  [[nodiscard]] std::string_view to_string(WitnessKind kind);

}  // namespace rwp
