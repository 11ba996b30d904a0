#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rwp {

  // A partial bijection of the ground set {1, ..., ground_size()}. Equality
  // is extensional and includes the ground size.
  class PartialInjection {
   public:
    using point_type = std::uint32_t;

    PartialInjection() = default;

    // Throws input_error if a point is outside the ground set, a source is
    // repeated or the map is not injective.
    PartialInjection(std::size_t                                     ground_size,
                     std::vector<std::pair<point_type, point_type>> const& arrows);

    static PartialInjection empty(std::size_t ground_size);
    static PartialInjection identity(std::size_t ground_size);

    [[nodiscard]] std::size_t ground_size() const noexcept {
      return _image.size();
    }
    [[nodiscard]] std::optional<point_type> operator()(point_type p) const;
    [[nodiscard]] std::size_t rank() const noexcept;  // size of the domain
    [[nodiscard]] bool        is_empty() const noexcept {
      return rank() == 0;
    }
    // Arrows sorted by source.
    [[nodiscard]] std::vector<std::pair<point_type, point_type>> arrows() const;

    auto operator<=>(PartialInjection const&) const = default;

   private:
    friend PartialInjection pinj_compose(PartialInjection const&,
                                         PartialInjection const&);
    friend PartialInjection pinj_invert(PartialInjection const&);

    // _image[p - 1] is the image of p, or 0 when p is outside the domain.
    std::vector<point_type> _image;
  };

  // Apply f, then g. Throws input_error on differing ground sizes.
  [[nodiscard]] PartialInjection pinj_compose(PartialInjection const& f,
                                              PartialInjection const& g);
  [[nodiscard]] PartialInjection pinj_invert(PartialInjection const& f);
  [[nodiscard]] PartialInjection pinj_power(PartialInjection const& f,
                                            std::size_t             k);

  // Finite link of length r: points 1..r, arrows i -> i + 1 for i < r.
  [[nodiscard]] PartialInjection link(std::size_t r);
  // The cycle 1 -> 2 -> ... -> s -> 1.
  [[nodiscard]] PartialInjection cycle(std::size_t s);

  // f on points 1..|f| together with g shifted onto |f|+1..|f|+|g|. The two
  // parts are strongly disjoint by construction.
  [[nodiscard]] PartialInjection
  strongly_disjoint_union(PartialInjection const& f, PartialInjection const& g);

  // "n; i->j, i->j" with arrows sorted by source; "n;" for the empty map.
  [[nodiscard]] std::string      to_string(PartialInjection const& f);
  [[nodiscard]] PartialInjection parse_partial_injection(std::string_view text);

  std::ostream& operator<<(std::ostream& os, PartialInjection const& f);

}  // namespace rwp
