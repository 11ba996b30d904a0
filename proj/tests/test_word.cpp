#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "rwp/word.hpp"

using namespace rwp;

TEST_CASE("reserved symbols", "[word]") {
  CHECK(is_reserved_symbol('-'));
  CHECK(is_reserved_symbol('#'));
  CHECK(is_reserved_symbol(' '));
  CHECK_FALSE(is_reserved_symbol('x'));
  CHECK_FALSE(is_reserved_symbol('X'));
}

TEST_CASE("canonical pair order", "[word]") {
  std::vector<WordPair> pairs{{"ab", "a"}, {"a", "ab"}, {"b", "a"}, {"a", "b"}, {"", ""}};
  std::sort(pairs.begin(), pairs.end());
  std::vector<WordPair> expected{{"", ""}, {"a", "b"}, {"b", "a"}, {"a", "ab"}, {"ab", "a"}};
  CHECK(pairs == expected);
  CHECK(WordPair{"X", "x"} < WordPair{"x", "X"});
}

TEST_CASE("pairs print as tuples", "[word]") {
  std::ostringstream out;
  out << WordPair{"xX", ""};
  CHECK(out.str() == "(xX, )");
}

TEST_CASE("all_words enumerates in shortlex order", "[word]") {
  std::vector<Symbol> ab{'a', 'b'};
  auto words = all_words(ab, 0, 2);
  std::vector<Word> expected{"", "a", "b", "aa", "ab", "ba", "bb"};
  CHECK(words == expected);
  CHECK(std::is_sorted(words.begin(), words.end(), [](auto const& a, auto const& b) {
    return shortlex_less(a, b);
  }));
  CHECK(all_words(ab, 3, 3).size() == 8);
  CHECK(all_words(ab, 1, 12).size() == (1u << 13) - 2);
  CHECK(all_words(ab, 3, 2).empty());
}

TEST_CASE("repeat", "[word]") {
  CHECK(repeat("xX", 3) == "xXxXxX");
  CHECK(repeat("x", 0).empty());
}
