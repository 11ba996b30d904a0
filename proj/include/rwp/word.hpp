#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwp {

  // Symbols are single bytes. '-' spells the empty label and '#' starts a
  // comment in the text formats, so neither may be used as a symbol.
  using Symbol = char;
  using Word   = std::string;

  [[nodiscard]] bool is_reserved_symbol(Symbol a) noexcept;

  // A pair of words, one per tape. Ordered canonically: by length of the
  // first word, then length of the second, then lexicographically.
  struct WordPair {
    Word first;
    Word second;

    bool operator==(WordPair const&) const = default;
    std::strong_ordering operator<=>(WordPair const& that) const;
  };

  std::ostream& operator<<(std::ostream& os, WordPair const& p);

  // Canonical comparison of single words (shortlex).
  [[nodiscard]] bool shortlex_less(std::string_view a, std::string_view b);

  // All words over `alphabet` with min_len <= length <= max_len, in shortlex
  // order with symbols ordered by their byte value.
  [[nodiscard]] std::vector<Word> all_words(std::span<Symbol const> alphabet,
                                            std::size_t min_len,
                                            std::size_t max_len);

  [[nodiscard]] Word repeat(std::string_view w, std::size_t k);

}  // namespace rwp
