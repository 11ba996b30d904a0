#include "rwp/algebra/free_inverse.hpp"

#include <algorithm>
#include <charconv>

#include "rwp/error.hpp"

namespace rwp {

  FreeInverseTriple::FreeInverseTriple(std::int64_t l,
                                       std::int64_t n,
                                       std::int64_t m)
      : _l(l), _n(n), _m(m) {
    if (l < 0 || n < 0 || l + n == 0 || m < -l || m > n) {
      throw input_error("(" + std::to_string(-l) + "," + std::to_string(n) + ","
                        + std::to_string(m) + ") is not a free inverse triple");
    }
  }

  FreeInverseTriple fi_mul(FreeInverseTriple const& a,
                           FreeInverseTriple const& b) {
    // Left reach is stored as a nonnegative distance, so min on -l becomes
    // max on l.
    return FreeInverseTriple(std::max(a.l(), b.l() - a.m()),
                             std::max(a.n(), a.m() + b.n()),
                             a.m() + b.m());
  }

  FreeInverseTriple fi_inverse(FreeInverseTriple const& a) {
    return FreeInverseTriple(a.l() + a.m(), a.n() - a.m(), -a.m());
  }

  namespace {
    FreeInverseTriple letter(char c) {
      switch (c) {
        case 'x':
          return FreeInverseTriple::generator();
        case 'X':
          return FreeInverseTriple::generator_inverse();
        default:
          throw input_error(std::string("'") + c
                            + "' is not a letter of {x, X}");
      }
    }
  }  // namespace

  FreeInverseTriple fi_eval(std::string_view word) {
    if (word.empty()) {
      throw input_error("the empty word has no value in a semigroup");
    }
    FreeInverseTriple acc = letter(word.front());
    for (char c : word.substr(1)) {
      acc = fi_mul(acc, letter(c));
    }
    return acc;
  }

  FreeInverseTriple fi_eval_walk(std::string_view word) {
    if (word.empty()) {
      throw input_error("the empty word has no value in a semigroup");
    }
    std::int64_t pos = 0, lowest = 0, highest = 0;
    for (char c : word) {
      if (c == 'x') {
        ++pos;
      } else if (c == 'X') {
        --pos;
      } else {
        throw input_error(std::string("'") + c + "' is not a letter of {x, X}");
      }
      lowest  = std::min(lowest, pos);
      highest = std::max(highest, pos);
    }
    return FreeInverseTriple(-lowest, highest, pos);
  }

  std::string to_string(FreeInverseTriple const& a) {
    return "(" + std::to_string(-a.l()) + "," + std::to_string(a.n()) + ","
           + std::to_string(a.m()) + ")";
  }

  FreeInverseTriple parse_triple(std::string_view text) {
    auto fail = [&]() -> FreeInverseTriple {
      throw input_error("cannot parse triple \"" + std::string(text) + "\"");
    };
    std::string compact;
    for (char c : text) {
      if (c != ' ' && c != '\t') {
        compact += c;
      }
    }
    if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
      return fail();
    }
    std::int64_t v[3];
    char const*  p   = compact.data() + 1;
    char const*  end = compact.data() + compact.size() - 1;
    for (int k = 0; k < 3; ++k) {
      auto [next, ec] = std::from_chars(p, end, v[k]);
      if (ec != std::errc()) {
        return fail();
      }
      p = next;
      if (k < 2) {
        if (p == end || *p != ',') {
          return fail();
        }
        ++p;
      }
    }
    if (p != end) {
      return fail();
    }
    return FreeInverseTriple(-v[0], v[1], v[2]);
  }

  std::ostream& operator<<(std::ostream& os, FreeInverseTriple const& a) {
    return os << to_string(a);
  }

}  // namespace rwp
