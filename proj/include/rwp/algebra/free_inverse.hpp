#pragma once

// Preston's model of the free monogenic inverse semigroup: triples
// (-l, n, m) recording the leftmost point, rightmost point and endpoint of a
// walk on the integers that starts at 0. The generator x is the unit step
// (0, 1, 1) and its inverse X is (-1, 0, -1).

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rwp {

  class FreeInverseTriple {
   public:
    // Throws input_error unless l, n >= 0, l + n > 0 and -l <= m <= n.
    FreeInverseTriple(std::int64_t l, std::int64_t n, std::int64_t m);

    static FreeInverseTriple generator() {
      return FreeInverseTriple(0, 1, 1);
    }
    static FreeInverseTriple generator_inverse() {
      return FreeInverseTriple(1, 0, -1);
    }

    // Distance reached to the left of 0; the first coordinate is -l().
    [[nodiscard]] std::int64_t l() const noexcept {
      return _l;
    }
    [[nodiscard]] std::int64_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] std::int64_t m() const noexcept {
      return _m;
    }
    [[nodiscard]] bool is_idempotent() const noexcept {
      return _m == 0;
    }

    auto operator<=>(FreeInverseTriple const&) const = default;

   private:
    std::int64_t _l;
    std::int64_t _n;
    std::int64_t _m;
  };

  // (-l, n, m)(-l', n', m') = (min(-l, m - l'), max(n, m + n'), m + m')
  [[nodiscard]] FreeInverseTriple fi_mul(FreeInverseTriple const& a,
                                         FreeInverseTriple const& b);

  // The unique inverse (-(l + m), n - m, -m): the reversed walk.
  [[nodiscard]] FreeInverseTriple fi_inverse(FreeInverseTriple const& a);

  // Product of the letters of a non-empty word over {x, X}, X = x^-1.
  [[nodiscard]] FreeInverseTriple fi_eval(std::string_view word);

  // Independent evaluation: (min, max, last) of the prefix sums of the walk
  // x = +1, X = -1. Shares no code with fi_mul.
  [[nodiscard]] FreeInverseTriple fi_eval_walk(std::string_view word);

  // "(-l,n,m)", e.g. "(-1,3,2)" or "(0,3,3)".
  [[nodiscard]] std::string to_string(FreeInverseTriple const& a);
  [[nodiscard]] FreeInverseTriple parse_triple(std::string_view text);

  std::ostream& operator<<(std::ostream& os, FreeInverseTriple const& a);

}  // namespace rwp
