#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rwp/algebra/partial_injection.hpp"

namespace rwp {

  // A finite semigroup on {0, ..., size() - 1} given by its multiplication
  // table. The constructor checks totality and associativity (O(n^3)).
  class FiniteSemigroup {
   public:
    using element_type = std::uint32_t;

    // rows[a][b] = a * b
    explicit FiniteSemigroup(std::vector<std::vector<element_type>> rows);

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] element_type mul(element_type a, element_type b) const {
      return _table[static_cast<std::size_t>(a) * _size + b];
    }
    [[nodiscard]] std::vector<std::vector<element_type>> rows() const;

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    std::size_t               _size;
    std::vector<element_type> _table;
  };

  [[nodiscard]] FiniteSemigroup cyclic_group(std::size_t order);
  // a * b = a
  [[nodiscard]] FiniteSemigroup left_zero_semigroup(std::size_t size);

  // The multiplication table (under pinj_compose) of a set of partial
  // injections closed under composition; element i is elements[i].
  [[nodiscard]] FiniteSemigroup
  table_of(std::span<PartialInjection const> elements);

}  // namespace rwp
