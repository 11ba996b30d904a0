#include "rwp/afsa.hpp"

#include <algorithm>
#include <map>

#include "rwp/error.hpp"

namespace rwp {

  namespace {
    std::string label_text(Label const& l) {
      return l ? std::string(1, *l) : std::string("-");
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Afsa
  ////////////////////////////////////////////////////////////////////////

  Afsa::Afsa(std::vector<std::string> state_names,
             StateId                  start,
             std::vector<StateId>     finals,
             std::vector<Symbol>      alphabet,
             std::vector<Transition>  transitions)
      : _names(std::move(state_names)),
        _start(start),
        _is_final(_names.size(), false),
        _finals(std::move(finals)),
        _alphabet(std::move(alphabet)),
        _transitions(std::move(transitions)) {
    if (_names.empty()) {
      throw input_error("an automaton needs at least one state");
    }
    for (StateId q = 0; q < _names.size(); ++q) {
      if (_names[q].empty()
          || _names[q].find_first_of(" \t\r\n#") != std::string::npos) {
        throw input_error("invalid state name \"" + _names[q] + "\"");
      }
      if (!_index.emplace(_names[q], q).second) {
        throw input_error("duplicate state name \"" + _names[q] + "\"");
      }
    }
    if (_start >= _names.size()) {
      throw input_error("start state out of range");
    }

    std::sort(_finals.begin(), _finals.end());
    _finals.erase(std::unique(_finals.begin(), _finals.end()), _finals.end());
    for (StateId f : _finals) {
      if (f >= _names.size()) {
        throw input_error("final state out of range");
      }
      _is_final[f] = true;
    }

    std::sort(_alphabet.begin(), _alphabet.end());
    _alphabet.erase(std::unique(_alphabet.begin(), _alphabet.end()),
                    _alphabet.end());
    for (Symbol a : _alphabet) {
      if (is_reserved_symbol(a)) {
        throw input_error(std::string("reserved character '") + a
                          + "' cannot be a symbol");
      }
    }

    for (Transition const& t : _transitions) {
      if (t.source >= _names.size() || t.target >= _names.size()) {
        throw input_error("transition refers to an unknown state");
      }
      for (Label const& l : {t.first, t.second}) {
        if (l && !has_symbol(*l)) {
          throw input_error("transition label '" + label_text(l)
                            + "' is not in the alphabet");
        }
      }
    }
    std::sort(_transitions.begin(), _transitions.end());
    _transitions.erase(std::unique(_transitions.begin(), _transitions.end()),
                       _transitions.end());

    _offsets.assign(_names.size() + 1, 0);
    for (Transition const& t : _transitions) {
      ++_offsets[t.source + 1];
    }
    for (std::size_t q = 0; q < _names.size(); ++q) {
      _offsets[q + 1] += _offsets[q];
    }
  }

  std::optional<StateId> Afsa::find_state(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool Afsa::has_symbol(Symbol a) const noexcept {
    return std::binary_search(_alphabet.begin(), _alphabet.end(), a);
  }

  std::span<Transition const> Afsa::transitions_from(StateId q) const {
    if (q >= _names.size()) {
      throw input_error("state out of range");
    }
    return std::span<Transition const>(_transitions)
        .subspan(_offsets[q], _offsets[q + 1] - _offsets[q]);
  }

  std::size_t Afsa::transition_index(Transition const& t) const {
    auto it = std::lower_bound(_transitions.begin(), _transitions.end(), t);
    if (it == _transitions.end() || *it != t) {
      throw input_error("transition does not belong to the automaton");
    }
    return static_cast<std::size_t>(it - _transitions.begin());
  }

  bool Afsa::operator==(Afsa const& that) const {
    return _names == that._names && _start == that._start
           && _finals == that._finals && _alphabet == that._alphabet
           && _transitions == that._transitions;
  }

  ////////////////////////////////////////////////////////////////////////
  // AfsaBuilder
  ////////////////////////////////////////////////////////////////////////

  StateId AfsaBuilder::add_state(std::string const& name) {
    auto [it, inserted]
        = _index.emplace(name, static_cast<StateId>(_names.size()));
    if (inserted) {
      _names.push_back(name);
    }
    return it->second;
  }

  AfsaBuilder& AfsaBuilder::set_start(std::string const& name) {
    _start = add_state(name);
    return *this;
  }

  AfsaBuilder& AfsaBuilder::add_final(std::string const& name) {
    _finals.push_back(add_state(name));
    return *this;
  }

  AfsaBuilder& AfsaBuilder::add_symbol(Symbol a) {
    _alphabet.push_back(a);
    return *this;
  }

  AfsaBuilder& AfsaBuilder::add_alphabet(std::string_view symbols) {
    _alphabet.insert(_alphabet.end(), symbols.begin(), symbols.end());
    return *this;
  }

  AfsaBuilder& AfsaBuilder::add_transition(std::string const& source,
                                           Label              first,
                                           Label              second,
                                           std::string const& target) {
    StateId s = add_state(source);
    StateId t = add_state(target);
    _transitions.push_back({s, first, second, t});
    return *this;
  }

  Afsa AfsaBuilder::build() const {
    if (!_start) {
      throw input_error("no start state");
    }
    return Afsa(_names, *_start, _finals, _alphabet, _transitions);
  }

  ////////////////////////////////////////////////////////////////////////
  // Runs
  ////////////////////////////////////////////////////////////////////////

  bool Run::is_accepting(Afsa const& afsa) const {
    if (configs.empty()) {
      return false;
    }
    Configuration const& last = configs.back();
    return last.pos1 == input.first.size() && last.pos2 == input.second.size()
           && last.state < afsa.num_states() && afsa.is_final(last.state);
  }

  Run replay_run(Afsa const&             afsa,
                 WordPair const&         input,
                 std::vector<Transition> steps) {
    Run run{input, std::move(steps), {}};
    run.configs.reserve(run.steps.size() + 1);
    Configuration c{afsa.start(), 0, 0};
    run.configs.push_back(c);
    for (std::size_t s = 0; s < run.steps.size(); ++s) {
      Transition const& t = run.steps[s];
      (void) afsa.transition_index(t);
      if (t.source != c.state) {
        throw input_error("step " + std::to_string(s)
                          + " does not leave the current state");
      }
      if (t.first) {
        if (c.pos1 >= input.first.size() || input.first[c.pos1] != *t.first) {
          throw input_error("step " + std::to_string(s)
                            + " does not match tape 1");
        }
        ++c.pos1;
      }
      if (t.second) {
        if (c.pos2 >= input.second.size()
            || input.second[c.pos2] != *t.second) {
          throw input_error("step " + std::to_string(s)
                            + " does not match tape 2");
        }
        ++c.pos2;
      }
      c.state = t.target;
      run.configs.push_back(c);
    }
    return run;
  }

  std::vector<WordPair> enumerate_accepted(Afsa const& afsa,
                                           std::size_t max_len) {
    std::vector<Word>     words = all_words(afsa.alphabet(), 0, max_len);
    std::vector<WordPair> out;
    for (Word const& u : words) {
      for (Word const& v : words) {
        WordPair p{u, v};
        if (accepts(afsa, p)) {
          out.push_back(std::move(p));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Loops and pumping
  ////////////////////////////////////////////////////////////////////////

  std::optional<LoopDecomposition> find_loop(Run const&     run,
                                             PositionWindow window) {
    if (window.lo > window.hi || window.hi > run.input.first.size()) {
      throw input_error("tape-1 window [" + std::to_string(window.lo) + ", "
                        + std::to_string(window.hi) + "] is not inside [0, "
                        + std::to_string(run.input.first.size()) + "]");
    }
    if (run.configs.size() != run.steps.size() + 1) {
      throw input_error("malformed run");
    }
    // Tape-1 positions grow by at most one per step, so first occurrences
    // are met in increasing position order.
    std::map<StateId, std::size_t> seen;
    std::size_t                    next = window.lo;
    for (std::size_t c = 0; c < run.configs.size() && next <= window.hi; ++c) {
      Configuration const& cfg = run.configs[c];
      if (cfg.pos1 != next) {
        continue;
      }
      ++next;
      auto [it, inserted] = seen.emplace(cfg.state, c);
      if (!inserted) {
        Configuration const& from = run.configs[it->second];
        return LoopDecomposition{run,
                                 it->second,
                                 c,
                                 cfg.pos1 - from.pos1,
                                 cfg.pos2 - from.pos2};
      }
    }
    return std::nullopt;
  }

  WordPair pump(LoopDecomposition const& decomp, std::size_t k) {
    Configuration const& a = decomp.run.configs.at(decomp.loop_start);
    Configuration const& b = decomp.run.configs.at(decomp.loop_end);
    auto splice = [k](std::string const& w, std::size_t from, std::size_t to) {
      return w.substr(0, from) + repeat(std::string_view(w).substr(from, to - from), k)
             + w.substr(to);
    };
    return WordPair{splice(decomp.run.input.first, a.pos1, b.pos1),
                    splice(decomp.run.input.second, a.pos2, b.pos2)};
  }

}  // namespace rwp
