#pragma once

#include <string>
#include <string_view>

#include "rwp/afsa.hpp"

namespace rwp {

  // Line-oriented text format:
  //
  //   alphabet: a b
  //   states: q0 q1
  //   start: q0
  //   final: q0
  //   trans: q0 a - q1
  //
  // '-' is the empty label, '#' starts a comment. One transition per line.
  [[nodiscard]] Afsa        parse_afsa(std::string_view text);
  [[nodiscard]] std::string serialize_afsa(Afsa const& afsa);

  // Graphviz rendering: one node per state (final states double circled, the
  // start state bold), one edge per transition labelled "a|b".
  [[nodiscard]] std::string to_dot(Afsa const& afsa);

}  // namespace rwp
