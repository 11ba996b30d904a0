#pragma once

// Semigroups paired with a generating alphabet, their two-tape word
// problems, and automata recognising them.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rwp/afsa.hpp"
#include "rwp/algebra/bicyclic.hpp"
#include "rwp/algebra/finite_semigroup.hpp"
#include "rwp/algebra/free_inverse.hpp"
#include "rwp/algebra/partial_injection.hpp"
#include "rwp/word.hpp"

namespace rwp {

  struct FiniteElement {
    FiniteSemigroup::element_type index;

    auto operator<=>(FiniteElement const&) const = default;
  };

  struct FreeMonoidElement {
    Word word;

    auto operator<=>(FreeMonoidElement const&) const = default;
  };

  struct BicyclicModel {
    bool operator==(BicyclicModel const&) const = default;
  };
  struct FreeMonoidModel {
    bool operator==(FreeMonoidModel const&) const = default;
  };
  struct FreeInverseModel {
    bool operator==(FreeInverseModel const&) const = default;
  };
  struct PartialInjectionModel {
    std::size_t ground_size;

    bool operator==(PartialInjectionModel const&) const = default;
  };

  // Alternative i of Element is the element type of alternative i of Model.
  using Model = std::variant<FiniteSemigroup,
                             BicyclicModel,
                             FreeMonoidModel,
                             FreeInverseModel,
                             PartialInjectionModel>;
  using Element = std::variant<FiniteElement,
                               BicyclicElement,
                               FreeMonoidElement,
                               FreeInverseTriple,
                               PartialInjection>;

  [[nodiscard]] std::string to_string(Element const& e);

  class GeneratedSemigroup {
   public:
    // The alphabet is the key set of `generators`. Throws input_error if a
    // generator is not an element of the model or a symbol is reserved.
    GeneratedSemigroup(Model model, std::map<Symbol, Element> generators);

    [[nodiscard]] Model const& model() const noexcept {
      return _model;
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return std::holds_alternative<FiniteSemigroup>(_model);
    }
    // "finite", "bicyclic", "freemonoid", "freeinverse" or "pinj".
    [[nodiscard]] std::string_view kind() const noexcept;

    [[nodiscard]] std::span<Symbol const> alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::map<Symbol, Element> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] Element const& generator(Symbol a) const;

    [[nodiscard]] Element multiply(Element const& a, Element const& b) const;

    bool operator==(GeneratedSemigroup const&) const = default;

   private:
    Model                     _model;
    std::map<Symbol, Element> _generators;
    std::vector<Symbol>       _alphabet;
  };

  // Preston's triple model with x -> (0,1,1), X -> (-1,0,-1).
  [[nodiscard]] GeneratedSemigroup free_inverse_model();
  [[nodiscard]] GeneratedSemigroup free_monoid_model(std::string_view alphabet);
  // b -> c^0 b^1, c -> c^1 b^0
  [[nodiscard]] GeneratedSemigroup bicyclic_model();
  // The cyclic group of the given order generated by g.
  [[nodiscard]] GeneratedSemigroup cyclic_group_model(std::size_t order);
  // [u] as partial injections with x -> u, X -> u^-1.
  [[nodiscard]] GeneratedSemigroup monogenic_model(PartialInjection const& u);
  // [u] as a multiplication table with x -> u, X -> u^-1; throws
  // closure_cap_exceeded past `cap` elements.
  [[nodiscard]] GeneratedSemigroup
  monogenic_table_model(PartialInjection const& u, std::size_t cap = 100000);

  // pi_A(w) for non-empty w.
  [[nodiscard]] Element project(GeneratedSemigroup const& gs, std::string_view w);

  // (u, v) is in the word problem iff both are non-empty and project equally.
  [[nodiscard]] bool wp_contains(GeneratedSemigroup const& gs,
                                 std::string_view          u,
                                 std::string_view          v);

  // Every pair of the word problem with 1 <= |u|, |v| <= max_len, sorted.
  [[nodiscard]] std::vector<WordPair> enumerate_wp(GeneratedSemigroup const& gs,
                                                   std::size_t max_len);

  // One state q0, initial and final, with a loop (q0, a, a, q0) per symbol.
  [[nodiscard]] Afsa free_monoid_afsa(std::string_view alphabet);

  // Product of two copies of the right Cayley graph with an extra point for
  // "nothing read yet": states (S + _) x (S + _), start (_, _), each tape
  // advances its own coordinate, finals (s, s).
  [[nodiscard]] Afsa cayley_afsa(GeneratedSemigroup const& gs);

  struct WpReport {
    std::size_t           bound = 0;
    std::vector<WordPair> missed_pairs;  // in the word problem, rejected
    std::vector<WordPair> extra_pairs;   // accepted, not in the word problem

    [[nodiscard]] bool agrees() const noexcept {
      return missed_pairs.empty() && extra_pairs.empty();
    }
  };

  // Compares acceptance with membership on every pair of non-empty words of
  // length <= max_len.
  [[nodiscard]] WpReport check_afsa_against_oracle(Afsa const&               afsa,
                                                   GeneratedSemigroup const& gs,
                                                   std::size_t max_len);

  // The canonically first pair of non-empty words of length <= max_len on
  // which the two word problems disagree, or std::nullopt if none does.
  [[nodiscard]] std::optional<WordPair>
  kernel_equal_up_to(GeneratedSemigroup const& a,
                     GeneratedSemigroup const& b,
                     std::size_t               max_len);

}  // namespace rwp
