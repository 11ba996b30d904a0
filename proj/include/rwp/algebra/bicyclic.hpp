#pragma once

// The bicyclic monoid Mon<b, c | bc = 1>, with elements in normal form c^i b^j.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rwp {

  struct BicyclicElement {
    std::uint64_t c_power = 0;  // i in c^i b^j
    std::uint64_t b_power = 0;  // j in c^i b^j

    auto operator<=>(BicyclicElement const&) const = default;
  };

  inline constexpr BicyclicElement bicyclic_b{0, 1};
  inline constexpr BicyclicElement bicyclic_c{1, 0};

  // c^i b^j . c^k b^l = c^(i + k - min(j, k)) b^(j + l - min(j, k))
  [[nodiscard]] BicyclicElement bicyclic_mul(BicyclicElement const& p,
                                             BicyclicElement const& q);

  // Fold of bicyclic_mul over a word in {b, c}; the empty word is 1.
  [[nodiscard]] BicyclicElement bicyclic_eval(std::string_view word);

  // Deletes factors "bc" until none remain and reads off c^i b^j.
  [[nodiscard]] BicyclicElement bicyclic_eval_rewrite(std::string_view word);

  // "c^i b^j"
  [[nodiscard]] std::string     to_string(BicyclicElement const& e);
  [[nodiscard]] BicyclicElement parse_bicyclic(std::string_view text);

  std::ostream& operator<<(std::ostream& os, BicyclicElement const& e);

}  // namespace rwp
