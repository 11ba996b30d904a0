#include "rwp/word.hpp"

#include <algorithm>
#include <tuple>

namespace rwp {

  bool is_reserved_symbol(Symbol a) noexcept {
    return a == '-' || a == '#' || a == ' ' || a == '\t' || a == '\n'
           || a == '\r';
  }

  std::strong_ordering WordPair::operator<=>(WordPair const& that) const {
    return std::tuple(first.size(), second.size(), first, second)
           <=> std::tuple(
               that.first.size(), that.second.size(), that.first, that.second);
  }

  std::ostream& operator<<(std::ostream& os, WordPair const& p) {
    return os << '(' << p.first << ", " << p.second << ')';
  }

  bool shortlex_less(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  std::vector<Word> all_words(std::span<Symbol const> alphabet,
                              std::size_t              min_len,
                              std::size_t              max_len) {
    std::vector<Symbol> sorted(alphabet.begin(), alphabet.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Word> out;
    if (sorted.empty()) {
      if (min_len == 0) {
        out.emplace_back();
      }
      return out;
    }
    // Odometer over each length; digits index into the sorted alphabet.
    for (std::size_t len = min_len; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        Word w(len, '\0');
        for (std::size_t i = 0; i < len; ++i) {
          w[i] = sorted[digits[i]];
        }
        out.push_back(std::move(w));
        std::size_t pos = len;
        while (pos > 0 && ++digits[pos - 1] == sorted.size()) {
          digits[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) {
          break;
        }
      }
    }
    return out;
  }

  Word repeat(std::string_view w, std::size_t k) {
    Word out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.append(w);
    }
    return out;
  }

}  // namespace rwp
