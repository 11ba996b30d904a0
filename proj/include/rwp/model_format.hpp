#pragma once

// Text format for generated semigroups:
//
//   model: finite
//   row: 0 1
//   row: 1 0
//   gen: g -> 1
//
// The model kind is one of finite, bicyclic, freemonoid, freeinverse, pinj.
// Only finite models take `row:` lines. Generators are written in the
// element syntax of the model: a table index, "c^i b^j", a word, "(-l,n,m)"
// or "n; i->j, ...".

#include <string>
#include <string_view>

#include "rwp/wordproblem.hpp"

namespace rwp {

  [[nodiscard]] GeneratedSemigroup parse_model(std::string_view text);
  [[nodiscard]] std::string        serialize_model(GeneratedSemigroup const& gs);

  // Built-in models by name: "freeinverse", "bicyclic", "freemonoid:a,b",
  // "c<order>" (e.g. "c2"), "type:<r>,<s>" (the table of [u] for Preston's
  // canonical u) and "pinj-type:<r>,<s>" (the same as partial injections).
  // Returns std::nullopt for unknown names.
  [[nodiscard]] std::optional<GeneratedSemigroup>
  builtin_model(std::string_view name);

}  // namespace rwp
