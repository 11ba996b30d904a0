// rwp-cli: evaluate words, check word problems, build and run two-tape
// automata, and refute candidate recognisers for the free monogenic inverse
// semigroup.

#include <iostream>

#include <CLI11.hpp>

#include "rwp/cli.hpp"

int main(int argc, char** argv) {
  using rwp::cli::CliConfig;
  using rwp::cli::OutputFormat;

  CLI::App app{"Rational word problems and two-tape automata"};
  app.require_subcommand(1);

  CliConfig   config;
  std::string format = "text";
  std::string word;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model,-m",
                    config.model,
                    "Built-in model (freeinverse, bicyclic, freemonoid:a,b, c2, "
                    "type:r,s, pinj-type:r,s) or model file");
  };
  auto add_afsa = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--afsa,-a", config.afsa, "Automaton file");
    if (required) {
      opt->required();
    }
  };
  auto add_max_len = [&](CLI::App* sub) {
    sub->add_option("--max-len", config.max_len, "Maximum word length")
        ->check(CLI::PositiveNumber);
  };
  auto add_words = [&](CLI::App* sub, std::string const& what) {
    sub->add_option("words", config.words, what);
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a word in a model");
  add_model(eval);
  eval->add_option("--word,-w", word, "Word to evaluate");
  add_words(eval, "Word to evaluate");
  add_common(eval);

  auto* wp_check = app.add_subcommand("wp-check", "Test whether two words are equal");
  add_model(wp_check);
  add_words(wp_check, "The two words");
  add_common(wp_check);

  auto* wp_enum = app.add_subcommand("wp-enum", "List the word problem up to a length");
  add_model(wp_enum);
  add_max_len(wp_enum);
  add_common(wp_enum);

  auto* afsa_accept = app.add_subcommand("afsa-accept", "Run an automaton on a pair");
  add_afsa(afsa_accept, true);
  add_words(afsa_accept, "The two tape contents");
  add_common(afsa_accept);

  auto* afsa_enum = app.add_subcommand("afsa-enum", "List accepted pairs up to a length");
  add_afsa(afsa_enum, true);
  afsa_enum->add_option("--max-len", config.max_len, "Maximum word length");
  add_common(afsa_enum);

  auto* cayley = app.add_subcommand("cayley-afsa", "Word problem automaton of a finite model");
  add_model(cayley);
  add_common(cayley);

  auto* refute = app.add_subcommand(
      "refute-fi", "Refute an automaton claimed to recognise the free monogenic inverse semigroup");
  add_afsa(refute, false);
  refute->add_option("--seed", config.seed, "Refute a random automaton built from this seed");
  refute->add_option("--states", config.random_states, "Maximum states of the random automaton")
      ->check(CLI::PositiveNumber);
  refute->add_option("--n", config.pumping_n, "Override the pumping length")
      ->check(CLI::PositiveNumber);
  add_common(refute);

  auto* classify = app.add_subcommand("classify", "Index, period and closure of a partial injection");
  add_words(classify, "Partial injection, e.g. \"5; 1->2, 3->4, 4->5, 5->3\"");
  classify->add_option("--cap", config.cap, "Closure size bound")->check(CLI::PositiveNumber);
  add_max_len(classify);
  add_common(classify);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of an automaton");
  add_afsa(dot, false);
  add_model(dot);
  add_common(dot);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format  = format == "json" ? OutputFormat::json : OutputFormat::text;
  if (!word.empty()) {
    config.words.insert(config.words.begin(), word);
  }

  auto result = rwp::cli::run(config);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.status;
}
