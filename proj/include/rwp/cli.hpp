#pragma once

// Command dispatch for the rwp command-line tool. Argument parsing lives in
// tools/; everything here works on an already-parsed configuration so that
// it can be driven from tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rwp::cli {

  enum class OutputFormat { text, json };

  struct CliConfig {
    // eval, wp-check, wp-enum, afsa-accept, afsa-enum, cayley-afsa,
    // refute-fi, classify or export-dot
    std::string command;
    // Built-in model name or path to a model file.
    std::string model;
    // Path to an automaton file.
    std::string afsa;
    // Positional words, or the injection for classify.
    std::vector<std::string>     words;
    std::size_t                  max_len = 4;
    std::size_t                  cap     = 100000;
    std::optional<std::size_t>   pumping_n;
    std::size_t                  random_states = 4;
    std::optional<std::uint64_t> seed;
    OutputFormat                 format = OutputFormat::text;
  };

  // Exit status: 0 success, 1 negative verdict, 2 input error.
  struct CliResult {
    int         status = 0;
    std::string output;
    std::string diagnostics;
  };

  [[nodiscard]] CliResult run(CliConfig const& config);

}  // namespace rwp::cli
