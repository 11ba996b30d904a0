#include "rwp/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rwp/afsa_format.hpp"
#include "rwp/algebra/monogenic.hpp"
#include "rwp/error.hpp"
#include "rwp/model_format.hpp"
#include "rwp/random_afsa.hpp"
#include "rwp/refuter.hpp"
#include "rwp/wordproblem.hpp"

namespace rwp::cli {

  namespace {

    using json = nlohmann::json;

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw input_error("cannot read \"" + path + "\"");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    GeneratedSemigroup load_model(CliConfig const& c) {
      if (c.model.empty()) {
        throw input_error("--model is required");
      }
      if (auto gs = builtin_model(c.model)) {
        return *gs;
      }
      return parse_model(read_file(c.model));
    }

    Afsa load_afsa(CliConfig const& c) {
      if (c.afsa.empty()) {
        throw input_error("--afsa is required");
      }
      return parse_afsa(read_file(c.afsa));
    }

    void require_words(CliConfig const& c, std::size_t n) {
      if (c.words.size() != n) {
        throw input_error(c.command + " expects " + std::to_string(n)
                          + " word argument(s), got "
                          + std::to_string(c.words.size()));
      }
    }

    void require_max_len(CliConfig const& c) {
      if (c.max_len < 1) {
        throw input_error("--max-len must be at least 1");
      }
    }

    json pairs_json(std::vector<WordPair> const& pairs) {
      json out = json::array();
      for (auto const& p : pairs) {
        out.push_back({p.first, p.second});
      }
      return out;
    }

    std::string pairs_text(std::vector<WordPair> const& pairs) {
      std::ostringstream out;
      for (auto const& p : pairs) {
        out << p << '\n';
      }
      return out.str();
    }

    CliResult emit(CliConfig const& c, json doc, std::string text, int status = 0) {
      if (c.format == OutputFormat::json) {
        doc["command"] = c.command;
        return {status, doc.dump(2) + "\n", {}};
      }
      return {status, std::move(text), {}};
    }

    std::string transition_text(Afsa const& a, Transition const& t) {
      auto label = [](Label const& l) { return l ? std::string(1, *l) : std::string("-"); };
      return a.state_name(t.source) + " " + label(t.first) + " " + label(t.second)
             + " " + a.state_name(t.target);
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    CliResult cmd_eval(CliConfig const& c) {
      require_words(c, 1);
      auto gs    = load_model(c);
      auto value = to_string(project(gs, c.words[0]));
      return emit(c, {{"model", c.model}, {"word", c.words[0]}, {"value", value}},
                  value + "\n");
    }

    CliResult cmd_wp_check(CliConfig const& c) {
      require_words(c, 2);
      auto gs    = load_model(c);
      auto lhs   = project(gs, c.words[0]);
      auto rhs   = project(gs, c.words[1]);
      bool equal = lhs == rhs;
      return emit(c,
                  {{"model", c.model},
                   {"u", c.words[0]},
                   {"v", c.words[1]},
                   {"lhs", to_string(lhs)},
                   {"rhs", to_string(rhs)},
                   {"equal", equal}},
                  equal ? "equal\n" : "not equal\n",
                  equal ? 0 : 1);
    }

    CliResult cmd_wp_enum(CliConfig const& c) {
      require_max_len(c);
      auto pairs = enumerate_wp(load_model(c), c.max_len);
      return emit(c,
                  {{"model", c.model}, {"max_len", c.max_len}, {"pairs", pairs_json(pairs)}},
                  pairs_text(pairs));
    }

    CliResult cmd_afsa_accept(CliConfig const& c) {
      require_words(c, 2);
      auto afsa = load_afsa(c);
      auto run  = find_accepting_run(afsa, {c.words[0], c.words[1]});
      json steps = json::array();
      std::string text = run ? "accepted\n" : "rejected\n";
      if (run) {
        for (auto const& t : run->steps) {
          steps.push_back(transition_text(afsa, t));
        }
      }
      return emit(c,
                  {{"u", c.words[0]},
                   {"v", c.words[1]},
                   {"accepted", run.has_value()},
                   {"run", steps}},
                  text,
                  run ? 0 : 1);
    }

    CliResult cmd_afsa_enum(CliConfig const& c) {
      auto pairs = enumerate_accepted(load_afsa(c), c.max_len);
      return emit(c, {{"max_len", c.max_len}, {"pairs", pairs_json(pairs)}},
                  pairs_text(pairs));
    }

    CliResult cmd_cayley_afsa(CliConfig const& c) {
      auto afsa = cayley_afsa(load_model(c));
      auto text = serialize_afsa(afsa);
      return emit(c,
                  {{"model", c.model}, {"states", afsa.num_states()}, {"afsa", text}},
                  text);
    }

    CliResult cmd_refute_fi(CliConfig const& c) {
      Afsa afsa = c.afsa.empty() && c.seed
                      ? random_afsa(*c.seed, c.random_states, "xX")
                      : load_afsa(c);
      auto witness  = refute_fi_recognizer(afsa, c.pumping_n);
      bool verified = verify_witness(afsa, witness);
      json doc{{"kind", to_string(witness.kind)},
               {"u", witness.pair.first},
               {"v", witness.pair.second},
               {"n", witness.n},
               {"lhs", to_string(witness.lhs)},
               {"rhs", to_string(witness.rhs)},
               {"verified", verified},
               {"states", afsa.num_states()}};
      if (witness.i) {
        doc["i"] = *witness.i;
      }
      if (witness.j) {
        doc["j"] = *witness.j;
      }
      std::string text = serialize_witness(witness)
                         + "verified: " + (verified ? "true" : "false") + "\n";
      return emit(c, std::move(doc), std::move(text), verified ? 0 : 1);
    }

    CliResult cmd_classify(CliConfig const& c) {
      require_words(c, 1);
      auto u  = parse_partial_injection(c.words[0]);
      auto ip = index_period(u);

      json        doc{{"injection", to_string(u)}, {"index", ip.index}, {"period", ip.period}};
      std::size_t closure_size = 0;
      bool        complete     = true;
      try {
        closure_size = inverse_closure(u, c.cap).size();
      } catch (closure_cap_exceeded const& e) {
        closure_size = e.partial().size();
        complete     = false;
      }
      doc["closure_size"]     = closure_size;
      doc["closure_complete"] = complete;
      doc["cap"]              = c.cap;

      // Compare [u] with the canonical generator of type (index, period).
      auto canonical = make_type(MonogenicTypeParams::finite(ip.index, ip.period));
      auto witness   = kernel_equal_up_to(monogenic_model(u),
                                        monogenic_model(canonical),
                                        c.max_len);
      json cert{{"depth", c.max_len},
                {"canonical", to_string(canonical)},
                {"equal", !witness.has_value()}};
      if (witness) {
        cert["witness"] = {witness->first, witness->second};
      }
      doc["certificate"] = cert;

      std::ostringstream text;
      text << "index: " << ip.index << "\nperiod: " << ip.period
           << "\nclosure size: " << closure_size
           << (complete ? "" : " (partial, cap reached)") << "\ncanonical type ("
           << ip.index << "," << ip.period << "): ";
      if (witness) {
        text << "differs at " << *witness << '\n';
      } else {
        text << "kernels agree up to length " << c.max_len << '\n';
      }
      return emit(c, std::move(doc), text.str());
    }

    CliResult cmd_export_dot(CliConfig const& c) {
      Afsa afsa = c.afsa.empty() ? cayley_afsa(load_model(c)) : load_afsa(c);
      auto dot  = to_dot(afsa);
      return emit(c, {{"dot", dot}}, dot);
    }

  }  // namespace

  CliResult run(CliConfig const& config) {
    static std::map<std::string, std::function<CliResult(CliConfig const&)>> const
        commands{{"eval", cmd_eval},
                 {"wp-check", cmd_wp_check},
                 {"wp-enum", cmd_wp_enum},
                 {"afsa-accept", cmd_afsa_accept},
                 {"afsa-enum", cmd_afsa_enum},
                 {"cayley-afsa", cmd_cayley_afsa},
                 {"refute-fi", cmd_refute_fi},
                 {"classify", cmd_classify},
                 {"export-dot", cmd_export_dot}};
    auto it = commands.find(config.command);
    if (it == commands.end()) {
      return {2, {}, "unknown command \"" + config.command + "\"\n"};
    }
    try {
      return it->second(config);
    } catch (input_error const& e) {
      return {2, {}, std::string("error: ") + e.what() + "\n"};
    } catch (inconclusive_error const& e) {
      return {1, {}, std::string("inconclusive: ") + e.what() + "\n"};
    }
  }

}  // namespace rwp::cli
