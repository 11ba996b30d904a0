#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rwp/afsa.hpp"

namespace rwp {

  // A pseudo-random automaton with 1..max_states states over `alphabet`,
  // fully determined by `seed` (the generator and the mapping from random
  // bits to choices are fixed, so results agree across platforms).
  [[nodiscard]] Afsa random_afsa(std::uint64_t    seed,
                                 std::size_t      max_states,
                                 std::string_view alphabet);

}  // namespace rwp
