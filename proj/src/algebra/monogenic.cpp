#include "rwp/algebra/monogenic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rwp/error.hpp"

namespace rwp {

  PartialInjection make_type(MonogenicTypeParams params, std::size_t truncation) {
    if (params.s) {
      if (*params.s == 0) {
        throw input_error("the period of a type (r,s) is at least 1");
      }
      if (params.r == 0) {
        return cycle(*params.s);
      }
      return strongly_disjoint_union(link(params.r), cycle(*params.s));
    }
    if (truncation == 0) {
      throw input_error("type (r,Fwd) needs a truncation depth >= 1");
    }
    if (params.r == 0) {
      return link(truncation);
    }
    return strongly_disjoint_union(link(params.r), link(truncation));
  }

  closure_cap_exceeded::closure_cap_exceeded(std::size_t                   cap,
                                             std::vector<PartialInjection> partial)
      : std::runtime_error("inverse closure has more than " + std::to_string(cap)
                           + " elements"),
        _partial(std::move(partial)) {}

  std::vector<PartialInjection> inverse_closure(PartialInjection const& u,
                                                std::size_t             cap) {
    if (cap == 0) {
      throw input_error("closure cap must be at least 1");
    }
    // [u] is the semigroup generated by u and its inverse; right
    // multiplication by the generators reaches all of it.
    std::vector<PartialInjection> gens = {u, pinj_invert(u)};
    std::set<PartialInjection>    found;
    std::vector<PartialInjection> frontier;
    auto add = [&](PartialInjection const& f) {
      if (found.contains(f)) {
        return;
      }
      if (found.size() == cap) {
        throw closure_cap_exceeded(
            cap, std::vector<PartialInjection>(found.begin(), found.end()));
      }
      found.insert(f);
      frontier.push_back(f);
    };
    for (auto const& g : gens) {
      add(g);
    }
    while (!frontier.empty()) {
      std::vector<PartialInjection> current;
      current.swap(frontier);
      for (auto const& f : current) {
        for (auto const& g : gens) {
          add(pinj_compose(f, g));
        }
      }
    }
    return std::vector<PartialInjection>(found.begin(), found.end());
  }

  IndexPeriod index_period(PartialInjection const& u) {
    std::map<PartialInjection, std::size_t> first_seen;
    PartialInjection                        power = u;
    for (std::size_t k = 1;; ++k) {
      auto [it, inserted] = first_seen.emplace(power, k);
      if (!inserted) {
        return {it->second, k - it->second};
      }
      power = pinj_compose(power, u);
    }
  }

}  // namespace rwp
