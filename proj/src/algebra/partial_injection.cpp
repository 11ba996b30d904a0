#include "rwp/algebra/partial_injection.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rwp/error.hpp"

namespace rwp {

  PartialInjection::PartialInjection(
      std::size_t                                            ground_size,
      std::vector<std::pair<point_type, point_type>> const& arrows)
      : _image(ground_size, 0) {
    std::vector<bool> hit(ground_size + 1, false);
    for (auto [from, to] : arrows) {
      if (from < 1 || from > ground_size || to < 1 || to > ground_size) {
        throw input_error("arrow " + std::to_string(from) + "->"
                          + std::to_string(to) + " leaves the ground set 1.."
                          + std::to_string(ground_size));
      }
      if (_image[from - 1] != 0) {
        throw input_error("point " + std::to_string(from)
                          + " has two images");
      }
      if (hit[to]) {
        throw input_error("point " + std::to_string(to)
                          + " has two preimages");
      }
      _image[from - 1] = to;
      hit[to]          = true;
    }
  }

  PartialInjection PartialInjection::empty(std::size_t ground_size) {
    return PartialInjection(ground_size, {});
  }

  PartialInjection PartialInjection::identity(std::size_t ground_size) {
    std::vector<std::pair<point_type, point_type>> arrows;
    for (point_type p = 1; p <= ground_size; ++p) {
      arrows.emplace_back(p, p);
    }
    return PartialInjection(ground_size, arrows);
  }

  std::optional<PartialInjection::point_type>
  PartialInjection::operator()(point_type p) const {
    if (p < 1 || p > _image.size() || _image[p - 1] == 0) {
      return std::nullopt;
    }
    return _image[p - 1];
  }

  std::size_t PartialInjection::rank() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(_image.begin(), _image.end(), [](point_type q) {
          return q != 0;
        }));
  }

  std::vector<std::pair<PartialInjection::point_type, PartialInjection::point_type>>
  PartialInjection::arrows() const {
    std::vector<std::pair<point_type, point_type>> out;
    for (point_type p = 1; p <= _image.size(); ++p) {
      if (_image[p - 1] != 0) {
        out.emplace_back(p, _image[p - 1]);
      }
    }
    return out;
  }

  PartialInjection pinj_compose(PartialInjection const& f,
                                PartialInjection const& g) {
    if (f.ground_size() != g.ground_size()) {
      throw input_error("cannot compose partial injections on "
                        + std::to_string(f.ground_size()) + " and "
                        + std::to_string(g.ground_size()) + " points");
    }
    PartialInjection out = PartialInjection::empty(f.ground_size());
    for (std::size_t i = 0; i < f._image.size(); ++i) {
      auto mid = f._image[i];
      if (mid != 0) {
        out._image[i] = g._image[mid - 1];
      }
    }
    return out;
  }

  PartialInjection pinj_invert(PartialInjection const& f) {
    PartialInjection out = PartialInjection::empty(f.ground_size());
    for (std::size_t i = 0; i < f._image.size(); ++i) {
      if (f._image[i] != 0) {
        out._image[f._image[i] - 1]
            = static_cast<PartialInjection::point_type>(i + 1);
      }
    }
    return out;
  }

  PartialInjection pinj_power(PartialInjection const& f, std::size_t k) {
    if (k == 0) {
      throw input_error("semigroup powers start at 1");
    }
    PartialInjection acc = f;
    for (std::size_t i = 1; i < k; ++i) {
      acc = pinj_compose(acc, f);
    }
    return acc;
  }

  PartialInjection link(std::size_t r) {
    if (r == 0) {
      throw input_error("a finite link has at least one point");
    }
    std::vector<std::pair<PartialInjection::point_type,
                          PartialInjection::point_type>>
        arrows;
    for (PartialInjection::point_type i = 1; i < r; ++i) {
      arrows.emplace_back(i, i + 1);
    }
    return PartialInjection(r, arrows);
  }

  PartialInjection cycle(std::size_t s) {
    if (s == 0) {
      throw input_error("a cycle has at least one point");
    }
    std::vector<std::pair<PartialInjection::point_type,
                          PartialInjection::point_type>>
        arrows;
    for (PartialInjection::point_type i = 1; i <= s; ++i) {
      arrows.emplace_back(i, i % s + 1);
    }
    return PartialInjection(s, arrows);
  }

  PartialInjection strongly_disjoint_union(PartialInjection const& f,
                                           PartialInjection const& g) {
    auto arrows = f.arrows();
    auto offset = static_cast<PartialInjection::point_type>(f.ground_size());
    for (auto [from, to] : g.arrows()) {
      arrows.emplace_back(from + offset, to + offset);
    }
    return PartialInjection(f.ground_size() + g.ground_size(), arrows);
  }

  std::string to_string(PartialInjection const& f) {
    std::ostringstream out;
    out << f.ground_size() << ';';
    char const* sep = " ";
    for (auto [from, to] : f.arrows()) {
      out << sep << from << "->" << to;
      sep = ", ";
    }
    return out.str();
  }

  PartialInjection parse_partial_injection(std::string_view text) {
    auto fail = [&](std::string const& why) -> PartialInjection {
      throw input_error("cannot parse partial injection \"" + std::string(text)
                        + "\": " + why);
    };
    std::string compact;
    for (char c : text) {
      if (c != ' ' && c != '\t') {
        compact += c;
      }
    }
    auto semi = compact.find(';');
    if (semi == std::string::npos) {
      return fail("missing ';'");
    }
    std::size_t ground = 0;
    auto [gend, gec]   = std::from_chars(compact.data(), compact.data() + semi, ground);
    if (gec != std::errc() || gend != compact.data() + semi) {
      return fail("bad ground size");
    }
    std::vector<std::pair<PartialInjection::point_type,
                          PartialInjection::point_type>>
                arrows;
    std::string rest = compact.substr(semi + 1);
    std::size_t pos  = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      auto item  = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
      pos        = comma == std::string::npos ? rest.size() : comma + 1;
      auto arrow = item.find("->");
      if (arrow == std::string::npos) {
        return fail("expected i->j");
      }
      PartialInjection::point_type from = 0, to = 0;
      auto [e1, ec1] = std::from_chars(item.data(), item.data() + arrow, from);
      auto [e2, ec2] = std::from_chars(
          item.data() + arrow + 2, item.data() + item.size(), to);
      if (ec1 != std::errc() || ec2 != std::errc()
          || e1 != item.data() + arrow || e2 != item.data() + item.size()) {
        return fail("expected i->j");
      }
      arrows.emplace_back(from, to);
    }
    return PartialInjection(ground, arrows);
  }

  std::ostream& operator<<(std::ostream& os, PartialInjection const& f) {
    return os << to_string(f);
  }

}  // namespace rwp
