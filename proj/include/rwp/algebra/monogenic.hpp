#pragma once

// Monogenic inverse semigroups represented by partial injections: the
// canonical generators of Preston's types (r, s) and (r, Fwd), inverse
// closures, and index/period.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rwp/algebra/partial_injection.hpp"

namespace rwp {

  struct MonogenicTypeParams {
    std::size_t                r = 0;
    std::optional<std::size_t> s;  // std::nullopt means a forward link

    static MonogenicTypeParams finite(std::size_t r, std::size_t s) {
      return {r, s};
    }
    static MonogenicTypeParams forward(std::size_t r) {
      return {r, std::nullopt};
    }
  };

  // For (r, s): link(r) strongly disjoint from cycle(s), or cycle(s) alone
  // when r == 0. For (r, Fwd): link(r) next to link(truncation), which
  // behaves like a forward link for every product of fewer than
  // `truncation` factors.
  [[nodiscard]] PartialInjection make_type(MonogenicTypeParams params,
                                           std::size_t         truncation = 0);

  class closure_cap_exceeded : public std::runtime_error {
   public:
    closure_cap_exceeded(std::size_t cap, std::vector<PartialInjection> partial);

    [[nodiscard]] std::vector<PartialInjection> const& partial() const noexcept {
      return _partial;
    }

   private:
    std::vector<PartialInjection> _partial;
  };

  // The inverse semigroup [u] generated by u, sorted. Throws
  // closure_cap_exceeded (carrying the elements found so far) when it has
  // more than `cap` elements.
  [[nodiscard]] std::vector<PartialInjection>
  inverse_closure(PartialInjection const& u, std::size_t cap);

  struct IndexPeriod {
    std::size_t index;
    std::size_t period;

    bool operator==(IndexPeriod const&) const = default;
  };

  // Least r, s >= 1 with u^r = u^(r+s).
  [[nodiscard]] IndexPeriod index_period(PartialInjection const& u);

}  // namespace rwp
