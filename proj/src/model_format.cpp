#include "rwp/model_format.hpp"

#include <charconv>
#include <sstream>

#include "rwp/algebra/monogenic.hpp"
#include "rwp/error.hpp"

namespace rwp {

  namespace {

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    std::uint64_t parse_count(std::string_view s, std::string const& what) {
      std::uint64_t v = 0;
      auto [end, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || end != s.data() + s.size()) {
        throw input_error("bad " + what + " \"" + std::string(s) + "\"");
      }
      return v;
    }

    Element parse_element(std::string_view kind, std::string_view text) {
      if (kind == "finite") {
        return FiniteElement{static_cast<FiniteSemigroup::element_type>(
            parse_count(text, "table index"))};
      }
      if (kind == "bicyclic") {
        return parse_bicyclic(text);
      }
      if (kind == "freemonoid") {
        return FreeMonoidElement{Word(text)};
      }
      if (kind == "freeinverse") {
        return parse_triple(text);
      }
      return parse_partial_injection(text);
    }

  }  // namespace

  GeneratedSemigroup parse_model(std::string_view text) {
    std::optional<std::string>                            kind;
    std::vector<std::vector<FiniteSemigroup::element_type>> rows;
    std::map<Symbol, Element>                             gens;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      auto hash = raw.find('#');
      auto line = trim(std::string_view(raw).substr(0, hash));
      if (line.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw parse_error(line_no, "expected \"key: value\"");
      }
      auto key   = trim(std::string_view(line).substr(0, colon));
      auto value = trim(std::string_view(line).substr(colon + 1));
      try {
        if (key == "model") {
          if (kind) {
            throw parse_error(line_no, "duplicate \"model\" line");
          }
          if (value != "finite" && value != "bicyclic" && value != "freemonoid"
              && value != "freeinverse" && value != "pinj") {
            throw parse_error(line_no, "unknown model kind \"" + value + "\"");
          }
          kind = value;
        } else if (key == "row") {
          if (kind != "finite") {
            throw parse_error(line_no, "\"row\" lines need \"model: finite\" first");
          }
          std::istringstream                      cells(value);
          std::vector<FiniteSemigroup::element_type> row;
          std::string                             cell;
          while (cells >> cell) {
            row.push_back(static_cast<FiniteSemigroup::element_type>(
                parse_count(cell, "table entry")));
          }
          rows.push_back(std::move(row));
        } else if (key == "gen") {
          if (!kind) {
            throw parse_error(line_no, "\"gen\" before \"model\"");
          }
          auto arrow = value.find("->");
          if (arrow == std::string::npos) {
            throw parse_error(line_no, "expected \"gen: symbol -> element\"");
          }
          auto symbol = trim(std::string_view(value).substr(0, arrow));
          if (symbol.size() != 1 || is_reserved_symbol(symbol.front())) {
            throw parse_error(line_no, "invalid symbol \"" + symbol + "\"");
          }
          if (gens.contains(symbol.front())) {
            throw parse_error(line_no, "symbol \"" + symbol + "\" mapped twice");
          }
          gens.emplace(symbol.front(),
                       parse_element(*kind, trim(std::string_view(value).substr(arrow + 2))));
        } else {
          throw parse_error(line_no, "unknown key \"" + key + "\"");
        }
      } catch (parse_error const&) {
        throw;
      } catch (input_error const& e) {
        throw parse_error(line_no, e.what());
      }
    }
    if (!kind) {
      throw parse_error(line_no, "missing \"model\" line");
    }
    if (gens.empty()) {
      throw parse_error(line_no, "no \"gen\" lines");
    }
    try {
      Model model = FreeInverseModel{};
      if (*kind == "finite") {
        model = FiniteSemigroup(std::move(rows));
      } else if (*kind == "bicyclic") {
        model = BicyclicModel{};
      } else if (*kind == "freemonoid") {
        model = FreeMonoidModel{};
      } else if (*kind == "pinj") {
        model = PartialInjectionModel{
            std::get<PartialInjection>(gens.begin()->second).ground_size()};
      }
      return GeneratedSemigroup(std::move(model), std::move(gens));
    } catch (parse_error const&) {
      throw;
    } catch (input_error const& e) {
      throw parse_error(line_no, e.what());
    }
  }

  std::string serialize_model(GeneratedSemigroup const& gs) {
    std::ostringstream out;
    out << "model: " << gs.kind() << '\n';
    if (auto const* s = std::get_if<FiniteSemigroup>(&gs.model())) {
      for (auto const& row : s->rows()) {
        out << "row:";
        for (auto v : row) {
          out << ' ' << v;
        }
        out << '\n';
      }
    }
    for (auto const& [a, e] : gs.generators()) {
      out << "gen: " << a << " -> " << to_string(e) << '\n';
    }
    return out.str();
  }

  std::optional<GeneratedSemigroup> builtin_model(std::string_view name) {
    if (name == "freeinverse") {
      return free_inverse_model();
    }
    if (name == "bicyclic") {
      return bicyclic_model();
    }
    if (name.starts_with("freemonoid:")) {
      std::string symbols;
      for (char c : name.substr(11)) {
        if (c != ',') {
          symbols += c;
        }
      }
      return free_monoid_model(symbols);
    }
    if (name.size() >= 2 && name.front() == 'c'
        && name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      auto order = parse_count(name.substr(1), "group order");
      if (order == 0) {
        throw input_error("group order must be at least 1");
      }
      return cyclic_group_model(order);
    }
    for (std::string_view prefix : {"type:", "pinj-type:"}) {
      if (name.starts_with(prefix)) {
        auto params = name.substr(prefix.size());
        auto comma  = params.find(',');
        if (comma == std::string_view::npos) {
          throw input_error("expected " + std::string(prefix) + "<r>,<s>");
        }
        auto r = parse_count(params.substr(0, comma), "index");
        auto s = parse_count(params.substr(comma + 1), "period");
        auto u = make_type(MonogenicTypeParams::finite(r, s));
        return prefix == "type:" ? monogenic_table_model(u) : monogenic_model(u);
      }
    }
    return std::nullopt;
  }

}  // namespace rwp
