#pragma once

// Symbolic partial injections of the positive integers of the form
// i -> i + d on {i >= t}. The forward link is (1, 1), the backward link
// (2, -1).

#include <cstdint>
#include <ostream>
#include <string>

namespace rwp {

  class ShiftInjection {
   public:
    // Throws input_error unless t >= 1 and t + d >= 1.
    ShiftInjection(std::int64_t t, std::int64_t d);

    static ShiftInjection empty() {
      return ShiftInjection();
    }
    static ShiftInjection identity() {
      return ShiftInjection(1, 0);
    }
    static ShiftInjection forward_link() {
      return ShiftInjection(1, 1);
    }
    static ShiftInjection backward_link() {
      return ShiftInjection(2, -1);
    }

    [[nodiscard]] bool is_empty() const noexcept {
      return _empty;
    }
    // Least point of the domain; meaningless for the empty map.
    [[nodiscard]] std::int64_t least() const noexcept {
      return _t;
    }
    [[nodiscard]] std::int64_t shift() const noexcept {
      return _d;
    }

    bool operator==(ShiftInjection const&) const = default;

   private:
    ShiftInjection() = default;

    bool         _empty = true;
    std::int64_t _t     = 0;
    std::int64_t _d     = 0;
  };

  // Apply f, then g.
  [[nodiscard]] ShiftInjection shift_compose(ShiftInjection const& f,
                                             ShiftInjection const& g);

  [[nodiscard]] std::string to_string(ShiftInjection const& f);
  std::ostream&             operator<<(std::ostream& os, ShiftInjection const& f);

}  // namespace rwp
