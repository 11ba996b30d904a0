#include "rwp/random_afsa.hpp"

#include <random>
#include <string>

#include "rwp/error.hpp"

namespace rwp {

  Afsa random_afsa(std::uint64_t seed, std::size_t max_states, std::string_view alphabet) {
    if (max_states == 0) {
      throw input_error("max_states must be at least 1");
    }
    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t n) { return rng() % n; };

    std::size_t const states = 1 + below(max_states);
    // One in 2, 4 or 8 of the candidate transitions is kept.
    std::uint64_t const sparsity = std::uint64_t(2) << below(3);

    std::vector<Label> labels{std::nullopt};
    labels.insert(labels.end(), alphabet.begin(), alphabet.end());

    AfsaBuilder b;
    b.add_alphabet(alphabet);
    for (std::size_t q = 0; q < states; ++q) {
      b.add_state("q" + std::to_string(q));
    }
    b.set_start("q0");
    for (std::size_t q = 0; q < states; ++q) {
      if (below(2) == 0) {
        b.add_final("q" + std::to_string(q));
      }
    }
    for (std::size_t p = 0; p < states; ++p) {
      for (Label const& l1 : labels) {
        for (Label const& l2 : labels) {
          for (std::size_t q = 0; q < states; ++q) {
            if (below(sparsity) == 0) {
              b.add_transition("q" + std::to_string(p), l1, l2, "q" + std::to_string(q));
            }
          }
        }
      }
    }
    return b.build();
  }

}  // namespace rwp
