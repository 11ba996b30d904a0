#include "rwp/refuter.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "rwp/error.hpp"

namespace rwp {

  WordPair fi_valid_pair(std::size_t n) {
    if (n == 0) {
      throw input_error("n must be at least 1");
    }
    return {repeat("x", n) + repeat("X", n) + repeat("x", n), repeat("x", n)};
  }

  RefutationOutcome analyze_fi_recognizer(Afsa const&                afsa,
                                          std::optional<std::size_t> n_override) {
    auto alphabet = afsa.alphabet();
    if (alphabet.size() != 2 || !afsa.has_symbol('x') || !afsa.has_symbol('X')) {
      throw input_error("candidate automaton must have alphabet {x, X}");
    }
    std::size_t const n    = n_override.value_or(afsa.num_states() + 1);
    WordPair          pair = fi_valid_pair(n);

    auto run = find_accepting_run(afsa, pair);
    if (!run) {
      FreeInverseTriple lhs = fi_eval(pair.first);
      FreeInverseTriple rhs = fi_eval(pair.second);
      return {{WitnessKind::rejected_valid_pair, std::move(pair), n, {}, {}, lhs, rhs},
              std::nullopt};
    }

    // Tape-1 positions n..2n are the boundaries of the X block.
    auto loop = find_loop(*run, {n, 2 * n});
    if (!loop) {
      if (n > afsa.num_states()) {
        throw invariant_violation(
            "no repeated state in the X block despite n > |states|");
      }
      throw inconclusive_error("no repeated state in the X block with n = "
                               + std::to_string(n) + " <= |states| = "
                               + std::to_string(afsa.num_states()));
    }
    std::size_t const i = loop->consumed1;
    std::size_t const j = loop->consumed2;
    WordPair pumped     = pump(*loop, 2);
    if (pumped.first != repeat("x", n) + repeat("X", n + i) + repeat("x", n)
        || pumped.second != repeat("x", n + j)) {
      throw invariant_violation("pumped pair has an unexpected shape");
    }
    if (!accepts(afsa, pumped)) {
      throw invariant_violation("pumped pair is not accepted");
    }
    FreeInverseTriple lhs = fi_eval(pumped.first);
    FreeInverseTriple rhs = fi_eval(pumped.second);
    if (lhs == rhs) {
      throw invariant_violation("pumped pair evaluates equally");
    }
    return {{WitnessKind::accepted_invalid_pair, std::move(pumped), n, i, j, lhs, rhs},
            std::move(loop)};
  }

  RefutationWitness refute_fi_recognizer(Afsa const&                afsa,
                                         std::optional<std::size_t> n) {
    return analyze_fi_recognizer(afsa, n).witness;
  }

  bool verify_witness(Afsa const& afsa, RefutationWitness const& w) {
    for (Word const* side : {&w.pair.first, &w.pair.second}) {
      if (side->empty()) {
        return false;
      }
      for (Symbol a : *side) {
        if ((a != 'x' && a != 'X') || !afsa.has_symbol(a)) {
          return false;
        }
      }
    }
    FreeInverseTriple lhs = fi_eval_walk(w.pair.first);
    FreeInverseTriple rhs = fi_eval_walk(w.pair.second);
    if (lhs != w.lhs || rhs != w.rhs) {
      return false;
    }
    bool accepted = accepts(afsa, w.pair);
    switch (w.kind) {
      case WitnessKind::rejected_valid_pair:
        return lhs == rhs && !accepted;
      case WitnessKind::accepted_invalid_pair:
        if (w.i && w.j
            && (w.pair.first
                    != repeat("x", w.n) + repeat("X", w.n + *w.i) + repeat("x", w.n)
                || w.pair.second != repeat("x", w.n + *w.j))) {
          return false;
        }
        return lhs != rhs && accepted;
    }
    return false;
  }

  std::string_view to_string(WitnessKind kind) {
    return kind == WitnessKind::rejected_valid_pair ? "rejected-valid-pair"
                                                    : "accepted-invalid-pair";
  }

  std::string serialize_witness(RefutationWitness const& w) {
    std::ostringstream out;
    out << "kind: " << to_string(w.kind) << '\n'
        << "u: " << w.pair.first << '\n'
        << "v: " << w.pair.second << '\n'
        << "n: " << w.n << '\n';
    if (w.i) {
      out << "i: " << *w.i << '\n';
    }
    if (w.j) {
      out << "j: " << *w.j << '\n';
    }
    out << "lhs: " << to_string(w.lhs) << '\n' << "rhs: " << to_string(w.rhs) << '\n';
    return out.str();
  }

  RefutationWitness parse_witness(std::string_view text) {
    std::map<std::string, std::pair<std::size_t, std::string>> fields;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw parse_error(line_no, "expected \"key: value\"");
      }
      std::string key = line.substr(0, colon);
      std::string value = line.substr(colon + 1);
      value.erase(0, value.find_first_not_of(' '));
      while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) {
        value.pop_back();
      }
      if (!fields.emplace(key, std::pair(line_no, value)).second) {
        throw parse_error(line_no, "duplicate key \"" + key + "\"");
      }
    }
    auto get = [&](std::string const& key) -> std::pair<std::size_t, std::string> const& {
      auto it = fields.find(key);
      if (it == fields.end()) {
        throw parse_error(line_no, "missing key \"" + key + "\"");
      }
      return it->second;
    };
    auto count = [&](std::string const& key) {
      auto const& [ln, v] = get(key);
      std::size_t out     = 0;
      auto [end, ec]      = std::from_chars(v.data(), v.data() + v.size(), out);
      if (ec != std::errc() || end != v.data() + v.size()) {
        throw parse_error(ln, "bad count for \"" + key + "\"");
      }
      return out;
    };
    auto triple = [&](std::string const& key) {
      auto const& [ln, v] = get(key);
      try {
        return parse_triple(v);
      } catch (input_error const& e) {
        throw parse_error(ln, e.what());
      }
    };

    auto const& [kind_line, kind_text] = get("kind");
    WitnessKind kind;
    if (kind_text == "rejected-valid-pair") {
      kind = WitnessKind::rejected_valid_pair;
    } else if (kind_text == "accepted-invalid-pair") {
      kind = WitnessKind::accepted_invalid_pair;
    } else {
      throw parse_error(kind_line, "unknown witness kind \"" + kind_text + "\"");
    }
    RefutationWitness w{kind,
                        {get("u").second, get("v").second},
                        count("n"),
                        std::nullopt,
                        std::nullopt,
                        triple("lhs"),
                        triple("rhs")};
    if (fields.contains("i")) {
      w.i = count("i");
    }
    if (fields.contains("j")) {
      w.j = count("j");
    }
    return w;
  }

}  // namespace rwp
