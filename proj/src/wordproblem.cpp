#include "rwp/wordproblem.hpp"

#include <algorithm>

#include "rwp/algebra/monogenic.hpp"
#include "rwp/error.hpp"

namespace rwp {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  std::string to_string(Element const& e) {
    return std::visit(
        overloaded{
            [](FiniteElement const& f) { return std::to_string(f.index); },
            [](FreeMonoidElement const& w) { return w.word; },
            [](auto const& x) { return to_string(x); }},
        e);
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratedSemigroup
  ////////////////////////////////////////////////////////////////////////

  GeneratedSemigroup::GeneratedSemigroup(Model                     model,
                                         std::map<Symbol, Element> generators)
      : _model(std::move(model)), _generators(std::move(generators)) {
    if (_generators.empty()) {
      throw input_error("a generated semigroup needs at least one generator");
    }
    for (auto const& [a, e] : _generators) {
      if (is_reserved_symbol(a)) {
        throw input_error(std::string("reserved character '") + a
                          + "' cannot be a symbol");
      }
      if (e.index() != _model.index()) {
        throw input_error(std::string("generator '") + a
                          + "' is not an element of a " + std::string(kind())
                          + " model");
      }
      if (auto const* s = std::get_if<FiniteSemigroup>(&_model)) {
        if (std::get<FiniteElement>(e).index >= s->size()) {
          throw input_error(std::string("generator '") + a
                            + "' is outside the table");
        }
      } else if (auto const* p = std::get_if<PartialInjectionModel>(&_model)) {
        if (std::get<PartialInjection>(e).ground_size() != p->ground_size) {
          throw input_error(std::string("generator '") + a
                            + "' acts on the wrong ground set");
        }
      } else if (auto const* w = std::get_if<FreeMonoidElement>(&e)) {
        if (w->word.empty()) {
          throw input_error(std::string("generator '") + a
                            + "' is the empty word");
        }
      }
      _alphabet.push_back(a);
    }
  }

  std::string_view GeneratedSemigroup::kind() const noexcept {
    static constexpr std::string_view names[]
        = {"finite", "bicyclic", "freemonoid", "freeinverse", "pinj"};
    return names[_model.index()];
  }

  Element const& GeneratedSemigroup::generator(Symbol a) const {
    auto it = _generators.find(a);
    if (it == _generators.end()) {
      throw input_error(std::string("symbol '") + a
                        + "' is not in the generating alphabet");
    }
    return it->second;
  }

  Element GeneratedSemigroup::multiply(Element const& a, Element const& b) const {
    if (a.index() != _model.index() || b.index() != _model.index()) {
      throw input_error("element does not belong to this model");
    }
    return std::visit(
        overloaded{
            [&](FiniteSemigroup const& s) -> Element {
              return FiniteElement{s.mul(std::get<FiniteElement>(a).index,
                                         std::get<FiniteElement>(b).index)};
            },
            [&](BicyclicModel const&) -> Element {
              return bicyclic_mul(std::get<BicyclicElement>(a),
                                  std::get<BicyclicElement>(b));
            },
            [&](FreeMonoidModel const&) -> Element {
              return FreeMonoidElement{std::get<FreeMonoidElement>(a).word
                                       + std::get<FreeMonoidElement>(b).word};
            },
            [&](FreeInverseModel const&) -> Element {
              return fi_mul(std::get<FreeInverseTriple>(a),
                            std::get<FreeInverseTriple>(b));
            },
            [&](PartialInjectionModel const&) -> Element {
              return pinj_compose(std::get<PartialInjection>(a),
                                  std::get<PartialInjection>(b));
            }},
        _model);
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard models
  ////////////////////////////////////////////////////////////////////////

  GeneratedSemigroup free_inverse_model() {
    return GeneratedSemigroup(
        FreeInverseModel{},
        {{'x', FreeInverseTriple::generator()},
         {'X', FreeInverseTriple::generator_inverse()}});
  }

  GeneratedSemigroup free_monoid_model(std::string_view alphabet) {
    std::map<Symbol, Element> gens;
    for (Symbol a : alphabet) {
      gens.emplace(a, FreeMonoidElement{Word(1, a)});
    }
    return GeneratedSemigroup(FreeMonoidModel{}, std::move(gens));
  }

  GeneratedSemigroup bicyclic_model() {
    return GeneratedSemigroup(BicyclicModel{},
                              {{'b', bicyclic_b}, {'c', bicyclic_c}});
  }

  GeneratedSemigroup cyclic_group_model(std::size_t order) {
    return GeneratedSemigroup(
        cyclic_group(order),
        {{'g', FiniteElement{static_cast<FiniteSemigroup::element_type>(
                   order > 1 ? 1 : 0)}}});
  }

  GeneratedSemigroup monogenic_model(PartialInjection const& u) {
    return GeneratedSemigroup(PartialInjectionModel{u.ground_size()},
                              {{'x', u}, {'X', pinj_invert(u)}});
  }

  GeneratedSemigroup monogenic_table_model(PartialInjection const& u,
                                           std::size_t             cap) {
    auto elements = inverse_closure(u, cap);
    auto index_of = [&](PartialInjection const& f) {
      return FiniteElement{static_cast<FiniteSemigroup::element_type>(
          std::lower_bound(elements.begin(), elements.end(), f)
          - elements.begin())};
    };
    return GeneratedSemigroup(
        table_of(elements),
        {{'x', index_of(u)}, {'X', index_of(pinj_invert(u))}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Word problems
  ////////////////////////////////////////////////////////////////////////

  Element project(GeneratedSemigroup const& gs, std::string_view w) {
    if (w.empty()) {
      throw input_error("words of a word problem are non-empty");
    }
    Element acc = gs.generator(w.front());
    for (Symbol a : w.substr(1)) {
      acc = gs.multiply(acc, gs.generator(a));
    }
    return acc;
  }

  bool wp_contains(GeneratedSemigroup const& gs,
                   std::string_view          u,
                   std::string_view          v) {
    return project(gs, u) == project(gs, v);
  }

  namespace {
    // Projections of every non-empty word up to max_len, in shortlex order.
    std::vector<std::pair<Word, Element>> project_all(GeneratedSemigroup const& gs,
                                                      std::size_t max_len) {
      std::vector<std::pair<Word, Element>> out;
      for (Word& w : all_words(gs.alphabet(), 1, max_len)) {
        Element e = project(gs, w);
        out.emplace_back(std::move(w), std::move(e));
      }
      return out;
    }
  }  // namespace

  std::vector<WordPair> enumerate_wp(GeneratedSemigroup const& gs,
                                     std::size_t               max_len) {
    if (max_len == 0) {
      throw input_error("max_len must be at least 1");
    }
    auto                  words = project_all(gs, max_len);
    std::vector<WordPair> out;
    for (auto const& [u, pu] : words) {
      for (auto const& [v, pv] : words) {
        if (pu == pv) {
          out.push_back({u, v});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Afsa free_monoid_afsa(std::string_view alphabet) {
    if (alphabet.empty()) {
      throw input_error("alphabet must be non-empty");
    }
    AfsaBuilder b;
    b.set_start("q0").add_final("q0").add_alphabet(alphabet);
    for (Symbol a : alphabet) {
      b.add_transition("q0", a, a, "q0");
    }
    return b.build();
  }

  Afsa cayley_afsa(GeneratedSemigroup const& gs) {
    auto const* s = std::get_if<FiniteSemigroup>(&gs.model());
    if (s == nullptr) {
      throw input_error("the Cayley automaton needs a finite model, not "
                        + std::string(gs.kind()));
    }
    std::size_t const n    = s->size();
    std::size_t const none = n;  // the "nothing read yet" coordinate
    auto coord = [&](std::size_t x) {
      return x == none ? std::string("_") : std::to_string(x);
    };
    auto name = [&](std::size_t x, std::size_t y) {
      return "(" + coord(x) + "," + coord(y) + ")";
    };
    auto step = [&](std::size_t x, Symbol a) -> std::size_t {
      auto g = std::get<FiniteElement>(gs.generator(a)).index;
      return x == none ? g : s->mul(static_cast<FiniteSemigroup::element_type>(x), g);
    };

    AfsaBuilder b;
    b.set_start(name(none, none));
    for (Symbol a : gs.alphabet()) {
      b.add_symbol(a);
    }
    // States in the order (_,_), (_,0), ..., (0,_), (0,0), ...
    std::vector<std::size_t> order{none};
    for (std::size_t x = 0; x < n; ++x) {
      order.push_back(x);
    }
    for (std::size_t x : order) {
      for (std::size_t y : order) {
        b.add_state(name(x, y));
      }
    }
    for (std::size_t x : order) {
      for (std::size_t y : order) {
        for (Symbol a : gs.alphabet()) {
          b.add_transition(name(x, y), a, std::nullopt, name(step(x, a), y));
          b.add_transition(name(x, y), std::nullopt, a, name(x, step(y, a)));
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      b.add_final(name(x, x));
    }
    return b.build();
  }

  WpReport check_afsa_against_oracle(Afsa const&               afsa,
                                     GeneratedSemigroup const& gs,
                                     std::size_t               max_len) {
    if (!std::equal(afsa.alphabet().begin(),
                    afsa.alphabet().end(),
                    gs.alphabet().begin(),
                    gs.alphabet().end())) {
      throw input_error("automaton and semigroup have different alphabets");
    }
    WpReport report;
    report.bound = max_len;
    auto words   = project_all(gs, max_len);
    for (auto const& [u, pu] : words) {
      for (auto const& [v, pv] : words) {
        WordPair pair{u, v};
        bool     member   = pu == pv;
        bool     accepted = accepts(afsa, pair);
        if (member && !accepted) {
          report.missed_pairs.push_back(std::move(pair));
        } else if (!member && accepted) {
          report.extra_pairs.push_back(std::move(pair));
        }
      }
    }
    std::sort(report.missed_pairs.begin(), report.missed_pairs.end());
    std::sort(report.extra_pairs.begin(), report.extra_pairs.end());
    return report;
  }

  std::optional<WordPair> kernel_equal_up_to(GeneratedSemigroup const& a,
                                             GeneratedSemigroup const& b,
                                             std::size_t               max_len) {
    if (!std::equal(a.alphabet().begin(),
                    a.alphabet().end(),
                    b.alphabet().begin(),
                    b.alphabet().end())) {
      throw input_error("models have different generating alphabets");
    }
    auto wa = project_all(a, max_len);
    auto wb = project_all(b, max_len);
    // Shortlex word order is canonical pair order within each length block,
    // so scanning length blocks in (|u|, |v|) order finds the first witness.
    std::vector<std::size_t> block_start(max_len + 2, wa.size());
    for (std::size_t i = wa.size(); i-- > 0;) {
      block_start[wa[i].first.size()] = i;
    }
    for (std::size_t len = max_len + 1; len-- > 1;) {
      block_start[len] = std::min(block_start[len], block_start[len + 1]);
    }
    for (std::size_t lu = 1; lu <= max_len; ++lu) {
      for (std::size_t lv = 1; lv <= max_len; ++lv) {
        for (std::size_t i = block_start[lu]; i < block_start[lu + 1]; ++i) {
          for (std::size_t j = block_start[lv]; j < block_start[lv + 1]; ++j) {
            if ((wa[i].second == wa[j].second) != (wb[i].second == wb[j].second)) {
              return WordPair{wa[i].first, wa[j].first};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace rwp
