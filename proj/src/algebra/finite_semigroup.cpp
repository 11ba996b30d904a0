#include "rwp/algebra/finite_semigroup.hpp"

#include <algorithm>
#include <string>

#include "rwp/error.hpp"

namespace rwp {

  FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<element_type>> rows)
      : _size(rows.size()) {
    if (_size == 0) {
      throw input_error("a semigroup has at least one element");
    }
    _table.reserve(_size * _size);
    for (auto const& row : rows) {
      if (row.size() != _size) {
        throw input_error("multiplication table is not square");
      }
      for (element_type v : row) {
        if (v >= _size) {
          throw input_error("table entry " + std::to_string(v)
                            + " is not an element");
        }
        _table.push_back(v);
      }
    }
    for (element_type a = 0; a < _size; ++a) {
      for (element_type b = 0; b < _size; ++b) {
        for (element_type c = 0; c < _size; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw input_error("table is not associative at ("
                              + std::to_string(a) + ", " + std::to_string(b)
                              + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  std::vector<std::vector<FiniteSemigroup::element_type>>
  FiniteSemigroup::rows() const {
    std::vector<std::vector<element_type>> out(_size);
    for (std::size_t a = 0; a < _size; ++a) {
      out[a].assign(_table.begin() + a * _size, _table.begin() + (a + 1) * _size);
    }
    return out;
  }

  FiniteSemigroup cyclic_group(std::size_t order) {
    std::vector<std::vector<FiniteSemigroup::element_type>> rows(order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        rows[a].push_back(static_cast<FiniteSemigroup::element_type>((a + b) % order));
      }
    }
    return FiniteSemigroup(std::move(rows));
  }

  FiniteSemigroup left_zero_semigroup(std::size_t size) {
    std::vector<std::vector<FiniteSemigroup::element_type>> rows(size);
    for (std::size_t a = 0; a < size; ++a) {
      rows[a].assign(size, static_cast<FiniteSemigroup::element_type>(a));
    }
    return FiniteSemigroup(std::move(rows));
  }

  FiniteSemigroup table_of(std::span<PartialInjection const> elements) {
    using element_type = FiniteSemigroup::element_type;
    std::vector<std::pair<PartialInjection, element_type>> sorted;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      sorted.emplace_back(elements[i], static_cast<element_type>(i));
    }
    std::sort(sorted.begin(), sorted.end());
    auto index = [&](PartialInjection const& f) {
      auto it = std::lower_bound(
          sorted.begin(), sorted.end(), f, [](auto const& entry, auto const& g) {
            return entry.first < g;
          });
      if (it == sorted.end() || it->first != f) {
        throw input_error("element set is not closed under composition");
      }
      return it->second;
    };
    std::vector<std::vector<element_type>> rows(elements.size());
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) {
        rows[a].push_back(index(pinj_compose(elements[a], elements[b])));
      }
    }
    return FiniteSemigroup(std::move(rows));
  }

}  // namespace rwp
