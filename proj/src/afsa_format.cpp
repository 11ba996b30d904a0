#include "rwp/afsa_format.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "rwp/error.hpp"

namespace rwp {

  namespace {

    std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::string_view strip_comment(std::string_view line) {
      auto hash = line.find('#');
      return hash == std::string_view::npos ? line : line.substr(0, hash);
    }

    std::string label_text(Label const& l) {
      return l ? std::string(1, *l) : std::string("-");
    }

  }  // namespace

  Afsa parse_afsa(std::string_view text) {
    using Entry = std::pair<std::size_t, std::vector<std::string>>;
    std::optional<Entry> alphabet, states, finals;
    std::optional<std::pair<std::size_t, std::string>> start;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> trans;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto        eol  = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;

      line = strip_comment(line);
      auto fields = split_ws(line);
      if (fields.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw parse_error(line_no, "expected \"key: value\"");
      }
      auto keyf = split_ws(line.substr(0, colon));
      if (keyf.size() != 1) {
        throw parse_error(line_no, "expected \"key: value\"");
      }
      std::string const& key  = keyf.front();
      auto               vals = split_ws(line.substr(colon + 1));

      auto once = [&](auto& slot) {
        if (slot) {
          throw parse_error(line_no, "duplicate \"" + key + "\" line");
        }
        slot.emplace(line_no, vals);
      };
      if (key == "alphabet") {
        once(alphabet);
      } else if (key == "states") {
        once(states);
      } else if (key == "final") {
        once(finals);
      } else if (key == "start") {
        if (start) {
          throw parse_error(line_no, "duplicate \"start\" line");
        }
        if (vals.size() != 1) {
          throw parse_error(line_no, "start takes exactly one state");
        }
        start.emplace(line_no, vals.front());
      } else if (key == "trans") {
        if (vals.size() != 4) {
          throw parse_error(line_no,
                            "transition needs source, two labels and target");
        }
        trans.emplace_back(line_no, vals);
      } else {
        throw parse_error(line_no, "unknown key \"" + key + "\"");
      }
    }

    if (!states) {
      throw parse_error(line_no, "missing \"states\" line");
    }
    if (!start) {
      throw parse_error(line_no, "missing \"start\" line");
    }

    std::vector<Symbol> symbols;
    for (auto const& a : alphabet.value_or(Entry{}).second) {
      if (a.size() != 1 || is_reserved_symbol(a.front())) {
        throw parse_error(alphabet->first, "invalid symbol \"" + a + "\"");
      }
      symbols.push_back(a.front());
    }

    std::unordered_map<std::string, StateId> ids;
    for (auto const& s : states->second) {
      if (!ids.emplace(s, static_cast<StateId>(ids.size())).second) {
        throw parse_error(states->first, "duplicate state \"" + s + "\"");
      }
    }
    auto state_id = [&](std::size_t ln, std::string const& name) {
      auto it = ids.find(name);
      if (it == ids.end()) {
        throw parse_error(ln, "unknown state \"" + name + "\"");
      }
      return it->second;
    };
    auto label = [&](std::size_t ln, std::string const& tok) -> Label {
      if (tok == "-") {
        return std::nullopt;
      }
      if (tok.size() != 1
          || std::find(symbols.begin(), symbols.end(), tok.front())
                 == symbols.end()) {
        throw parse_error(ln, "unknown symbol \"" + tok + "\"");
      }
      return tok.front();
    };

    StateId              start_id = state_id(start->first, start->second);
    std::vector<StateId> final_ids;
    for (auto const& f : finals.value_or(Entry{}).second) {
      final_ids.push_back(state_id(finals->first, f));
    }
    std::vector<Transition> ts;
    for (auto const& [ln, v] : trans) {
      ts.push_back(
          {state_id(ln, v[0]), label(ln, v[1]), label(ln, v[2]), state_id(ln, v[3])});
    }
    return Afsa(states->second, start_id, final_ids, symbols, ts);
  }

  std::string serialize_afsa(Afsa const& afsa) {
    std::ostringstream out;
    out << "alphabet:";
    for (Symbol a : afsa.alphabet()) {
      out << ' ' << a;
    }
    out << "\nstates:";
    for (StateId q = 0; q < afsa.num_states(); ++q) {
      out << ' ' << afsa.state_name(q);
    }
    out << "\nstart: " << afsa.state_name(afsa.start()) << "\nfinal:";
    for (StateId f : afsa.finals()) {
      out << ' ' << afsa.state_name(f);
    }
    out << '\n';
    for (Transition const& t : afsa.transitions()) {
      out << "trans: " << afsa.state_name(t.source) << ' ' << label_text(t.first)
          << ' ' << label_text(t.second) << ' ' << afsa.state_name(t.target)
          << '\n';
    }
    return out.str();
  }

  std::string to_dot(Afsa const& afsa) {
    auto quote = [](std::string const& s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          q += '\\';
        }
        q += c;
      }
      return q + '"';
    };
    std::ostringstream out;
    out << "digraph afsa {\n  rankdir=LR;\n";
    for (StateId q = 0; q < afsa.num_states(); ++q) {
      out << "  " << quote(afsa.state_name(q)) << " [shape="
          << (afsa.is_final(q) ? "doublecircle" : "circle");
      if (q == afsa.start()) {
        out << ", style=bold";
      }
      out << "];\n";
    }
    for (Transition const& t : afsa.transitions()) {
      out << "  " << quote(afsa.state_name(t.source)) << " -> "
          << quote(afsa.state_name(t.target)) << " [label=\""
          << label_text(t.first) << '|' << label_text(t.second) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace rwp
