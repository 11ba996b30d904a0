#pragma once

// Two-tape asynchronous finite state automata.
//
// An automaton reads a pair of words left to right, consuming at most one
// symbol from each tape per transition. A pair is accepted when some run
// ends in a final state with both tapes fully consumed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rwp/word.hpp"

namespace rwp {

  using StateId = std::uint32_t;

  // A tape label: a symbol, or std::nullopt for the empty label.
  using Label = std::optional<Symbol>;

  struct Transition {
    StateId source;
    Label   first;
    Label   second;
    StateId target;

    auto operator<=>(Transition const&) const = default;
  };

  class Afsa {
   public:
    // Validates every invariant and canonicalises: the alphabet and final
    // states are sorted, transitions are sorted and deduplicated.
    Afsa(std::vector<std::string> state_names,
         StateId                  start,
         std::vector<StateId>     finals,
         std::vector<Symbol>      alphabet,
         std::vector<Transition>  transitions);

    [[nodiscard]] std::size_t num_states() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::string const& state_name(StateId q) const {
      return _names.at(q);
    }
    [[nodiscard]] std::optional<StateId> find_state(std::string_view name) const;

    [[nodiscard]] StateId start() const noexcept {
      return _start;
    }
    [[nodiscard]] bool is_final(StateId q) const {
      return _is_final.at(q);
    }
    [[nodiscard]] std::span<StateId const> finals() const noexcept {
      return _finals;
    }

    [[nodiscard]] std::span<Symbol const> alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] bool has_symbol(Symbol a) const noexcept;

    [[nodiscard]] std::span<Transition const> transitions() const noexcept {
      return _transitions;
    }
    // Transitions leaving q, in canonical order.
    [[nodiscard]] std::span<Transition const> transitions_from(StateId q) const;
    // Position of t in transitions(); t must belong to this automaton.
    [[nodiscard]] std::size_t transition_index(Transition const& t) const;

    bool operator==(Afsa const& that) const;

   private:
    std::vector<std::string>                 _names;
    std::unordered_map<std::string, StateId> _index;
    StateId                                  _start;
    std::vector<bool>                        _is_final;
    std::vector<StateId>                     _finals;
    std::vector<Symbol>                      _alphabet;
    std::vector<Transition>                  _transitions;
    std::vector<std::size_t>                 _offsets;
  };

  // Incremental construction by state name.
  class AfsaBuilder {
   public:
    StateId add_state(std::string const& name);
    AfsaBuilder& set_start(std::string const& name);
    AfsaBuilder& add_final(std::string const& name);
    AfsaBuilder& add_symbol(Symbol a);
    AfsaBuilder& add_alphabet(std::string_view symbols);
    AfsaBuilder& add_transition(std::string const& source,
                                Label              first,
                                Label              second,
                                std::string const& target);

    [[nodiscard]] Afsa build() const;

   private:
    std::vector<std::string>                 _names;
    std::unordered_map<std::string, StateId> _index;
    std::optional<StateId>                   _start;
    std::vector<StateId>                     _finals;
    std::vector<Symbol>                      _alphabet;
    std::vector<Transition>                  _transitions;
  };

  struct Configuration {
    StateId     state;
    std::size_t pos1;
    std::size_t pos2;

    bool operator==(Configuration const&) const = default;
  };

  struct Run {
    WordPair                   input;
    std::vector<Transition>    steps;
    std::vector<Configuration> configs;  // steps.size() + 1 entries

    [[nodiscard]] bool is_accepting(Afsa const& afsa) const;
  };

  // Builds the run of `steps` on `input` starting at (start, 0, 0); throws
  // input_error if a step does not apply.
  [[nodiscard]] Run replay_run(Afsa const&             afsa,
                               WordPair const&         input,
                               std::vector<Transition> steps);

  // Inclusive interval of tape-1 positions.
  struct PositionWindow {
    std::size_t lo;
    std::size_t hi;
  };

  struct LoopDecomposition {
    Run         run;
    std::size_t loop_start;  // index into run.configs
    std::size_t loop_end;    // index into run.configs, same state
    std::size_t consumed1;
    std::size_t consumed2;
  };

  [[nodiscard]] bool accepts(Afsa const& afsa, WordPair const& pair);

  // The accepting run found by the canonical search: configurations are
  // explored breadth first by total consumption, then in discovery order,
  // with transitions tried in canonical order; each configuration keeps the
  // transition that discovered it first.
  [[nodiscard]] std::optional<Run> find_accepting_run(Afsa const&     afsa,
                                                      WordPair const& pair);

  // Accepted pairs with both words of length <= max_len, canonically sorted.
  [[nodiscard]] std::vector<WordPair> enumerate_accepted(Afsa const& afsa,
                                                         std::size_t max_len);

  // Considers, for each tape-1 position in `window`, the first configuration
  // of the run reaching it, and returns the earliest pair of these sharing a
  // state. Pigeonhole guarantees a result when the window covers more
  // positions than there are states and the run reaches all of them.
  [[nodiscard]] std::optional<LoopDecomposition>
  find_loop(Run const& run, PositionWindow window);

  // The input with the loop segment repeated k times (k == 1 is the
  // original pair, k == 0 cuts the loop out).
  [[nodiscard]] WordPair pump(LoopDecomposition const& decomp, std::size_t k);

}  // namespace rwp
