#include "rwp/algebra/bicyclic.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "rwp/error.hpp"

namespace rwp {

  BicyclicElement bicyclic_mul(BicyclicElement const& p,
                               BicyclicElement const& q) {
    std::uint64_t cancel = std::min(p.b_power, q.c_power);
    return {p.c_power + q.c_power - cancel, p.b_power + q.b_power - cancel};
  }

  namespace {
    BicyclicElement letter(char ch) {
      switch (ch) {
        case 'b':
          return bicyclic_b;
        case 'c':
          return bicyclic_c;
        default:
          throw input_error(std::string("'") + ch
                            + "' is not a letter of {b, c}");
      }
    }
  }  // namespace

  BicyclicElement bicyclic_eval(std::string_view word) {
    BicyclicElement acc;
    for (char ch : word) {
      acc = bicyclic_mul(acc, letter(ch));
    }
    return acc;
  }

  BicyclicElement bicyclic_eval_rewrite(std::string_view word) {
    for (char ch : word) {
      (void) letter(ch);
    }
    std::string w(word);
    for (auto pos = w.find("bc"); pos != std::string::npos; pos = w.find("bc")) {
      w.erase(pos, 2);
    }
    // No factor bc remains, so every c precedes every b.
    auto first_b = w.find('b');
    auto cs      = first_b == std::string::npos ? w.size() : first_b;
    return {cs, w.size() - cs};
  }

  std::string to_string(BicyclicElement const& e) {
    return "c^" + std::to_string(e.c_power) + " b^" + std::to_string(e.b_power);
  }

  BicyclicElement parse_bicyclic(std::string_view text) {
    auto fail = [&]() -> BicyclicElement {
      throw input_error("cannot parse bicyclic element \"" + std::string(text)
                        + "\"");
    };
    std::string compact;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') {
        compact += ch;
      }
    }
    // c^<i>b^<j>
    if (compact.size() < 6 || compact.compare(0, 2, "c^") != 0) {
      return fail();
    }
    BicyclicElement e;
    char const*     p   = compact.data() + 2;
    char const*     end = compact.data() + compact.size();
    auto [q, ec1]       = std::from_chars(p, end, e.c_power);
    if (ec1 != std::errc() || end - q < 3 || q[0] != 'b' || q[1] != '^') {
      return fail();
    }
    auto [r, ec2] = std::from_chars(q + 2, end, e.b_power);
    if (ec2 != std::errc() || r != end) {
      return fail();
    }
    return e;
  }

  std::ostream& operator<<(std::ostream& os, BicyclicElement const& e) {
    return os << to_string(e);
  }

}  // namespace rwp
