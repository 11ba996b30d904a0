// Acceptance by reachability in the configuration graph.
//
// A configuration is (state, pos1, pos2). Transitions never decrease the
// total consumption pos1 + pos2 and raise it by at most two, so the graph is
// explored in layers of equal total consumption. Only three layers are live
// at once; duplicates are filtered with one bitmap per live layer. When a run
// is wanted every layer is kept, storing per configuration its key and the
// index of the transition that discovered it (eight bytes each).

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <limits>

#include "rwp/afsa.hpp"
#include "rwp/error.hpp"

namespace rwp {

  namespace {

    constexpr std::uint32_t no_transition
        = std::numeric_limits<std::uint32_t>::max();

    struct Layer {
      std::vector<std::uint32_t> keys;  // discovery order
      std::vector<std::uint32_t> via;   // discovering transition
    };

    class ConfigurationSearch {
     public:
      ConfigurationSearch(Afsa const& afsa, WordPair const& pair, bool record)
          : _afsa(afsa),
            _u(pair.first),
            _v(pair.second),
            _q(afsa.num_states()),
            _record(record) {
        for (Word const* w : {&_u, &_v}) {
          for (Symbol a : *w) {
            if (!afsa.has_symbol(a)) {
              throw input_error(std::string("symbol '") + a
                                + "' is not in the automaton's alphabet");
            }
          }
        }
        std::size_t width = std::min(_u.size(), _v.size()) + 1;
        if (width > std::numeric_limits<std::uint32_t>::max() / _q) {
          throw input_error("input too long for the configuration search");
        }
        _bits_per_layer = width * _q;
        for (auto& b : _seen) {
          b.assign((_bits_per_layer + 63) / 64, 0);
        }
        _layers.resize(record ? num_layers() : 3);
      }

      // Explores until the accepting configuration (f, |u|, |v|) is found;
      // returns f.
      std::optional<StateId> explore() {
        discover(0, 0, _afsa.start(), no_transition);
        if (_found) {
          return _found;
        }
        std::size_t const last = num_layers() - 1;
        for (std::size_t k = 0; k <= last; ++k) {
          Layer& layer = layer_at(k);
          for (std::size_t i = 0; i < layer.keys.size(); ++i) {
            std::uint32_t key   = layer.keys[i];
            std::size_t   p1    = lo(k) + key / _q;
            StateId       state = key % _q;
            std::size_t   p2    = k - p1;
            for (Transition const& t : _afsa.transitions_from(state)) {
              std::size_t n1 = p1, n2 = p2;
              if (t.first) {
                if (p1 >= _u.size() || _u[p1] != *t.first) {
                  continue;
                }
                ++n1;
              }
              if (t.second) {
                if (p2 >= _v.size() || _v[p2] != *t.second) {
                  continue;
                }
                ++n2;
              }
              discover(n1 + n2,
                       n1,
                       t.target,
                       static_cast<std::uint32_t>(
                           &t - _afsa.transitions().data()));
              if (_found) {
                return _found;
              }
            }
          }
          retire(k);
        }
        return std::nullopt;
      }

      Run reconstruct(StateId final_state) const {
        std::vector<Transition> steps;
        std::size_t             k     = num_layers() - 1;
        std::size_t             p1    = _u.size();
        StateId                 state = final_state;
        auto const              all   = _afsa.transitions();

        std::size_t                                           indexed = SIZE_MAX;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> index;
        while (true) {
          if (indexed != k) {
            Layer const& layer = _layers[k];
            index.clear();
            for (std::size_t i = 0; i < layer.keys.size(); ++i) {
              index.emplace_back(layer.keys[i], layer.via[i]);
            }
            std::sort(index.begin(), index.end());
            indexed = k;
          }
          std::uint32_t key = static_cast<std::uint32_t>((p1 - lo(k)) * _q + state);
          auto it = std::lower_bound(
              index.begin(),
              index.end(),
              std::pair<std::uint32_t, std::uint32_t>(key, 0));
          if (it == index.end() || it->first != key) {
            throw invariant_violation("configuration missing from search record");
          }
          if (it->second == no_transition) {
            break;
          }
          Transition const& t = all[it->second];
          steps.push_back(t);
          std::size_t d1 = t.first ? 1 : 0;
          std::size_t d2 = t.second ? 1 : 0;
          p1 -= d1;
          k -= d1 + d2;
          state = t.source;
        }
        std::reverse(steps.begin(), steps.end());
        return replay_run(_afsa, WordPair{_u, _v}, std::move(steps));
      }

     private:
      std::size_t num_layers() const noexcept {
        return _u.size() + _v.size() + 1;
      }
      std::size_t lo(std::size_t k) const noexcept {
        return k > _v.size() ? k - _v.size() : 0;
      }
      Layer& layer_at(std::size_t k) {
        return _layers[_record ? k : k % 3];
      }

      void discover(std::size_t k, std::size_t p1, StateId state, std::uint32_t via) {
        std::uint32_t key = static_cast<std::uint32_t>((p1 - lo(k)) * _q + state);
        std::uint64_t& word = _seen[k % 3][key / 64];
        std::uint64_t  bit  = std::uint64_t(1) << (key % 64);
        if (word & bit) {
          return;
        }
        word |= bit;
        Layer& layer = layer_at(k);
        layer.keys.push_back(key);
        if (_record) {
          layer.via.push_back(via);
        }
        if (k + 1 == num_layers() && _afsa.is_final(state)) {
          _found = state;
        }
      }

      void retire(std::size_t k) {
        auto& seen = _seen[k % 3];
        Layer& layer = layer_at(k);
        for (std::uint32_t key : layer.keys) {
          seen[key / 64] = 0;
        }
        if (!_record) {
          layer.keys.clear();
        }
      }

      Afsa const&                _afsa;
      Word const&                _u;
      Word const&                _v;
      std::size_t                _q;
      bool                       _record;
      std::size_t                _bits_per_layer = 0;
      std::vector<std::uint64_t> _seen[3];
      std::vector<Layer>         _layers;
      std::optional<StateId>     _found;
    };

  }  // namespace

  bool accepts(Afsa const& afsa, WordPair const& pair) {
    ConfigurationSearch search(afsa, pair, false);
    return search.explore().has_value();
  }

  std::optional<Run> find_accepting_run(Afsa const& afsa, WordPair const& pair) {
    ConfigurationSearch search(afsa, pair, true);
    auto                final_state = search.explore();
    if (!final_state) {
      return std::nullopt;
    }
    return search.reconstruct(*final_state);
  }

}  // namespace rwp
