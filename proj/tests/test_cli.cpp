#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "rwp/afsa_format.hpp"
#include "rwp/cli.hpp"
#include "support/oracles.hpp"

using namespace rwp;
using rwp::cli::CliConfig;
using rwp::cli::OutputFormat;

namespace {

  std::string write_temp(std::string const& name, std::string const& text) {
    auto path = std::filesystem::temp_directory_path() / ("rwp-test-" + name);
    std::ofstream(path) << text;
    return path.string();
  }

  CliConfig config(std::string command, std::string model = {}, std::vector<std::string> words = {}) {
    CliConfig c;
    c.command = std::move(command);
    c.model   = std::move(model);
    c.words   = std::move(words);
    return c;
  }

  nlohmann::json run_json(CliConfig c) {
    c.format = OutputFormat::json;
    auto r   = cli::run(c);
    INFO(r.diagnostics);
    return nlohmann::json::parse(r.output);
  }

}  // namespace

TEST_CASE("eval", "[cli]") {
  auto r = cli::run(config("eval", "freeinverse", {"xxxXXXXxxx"}));
  CHECK(r.status == 0);
  CHECK(r.output == "(-1,3,2)\n");
  auto j = run_json(config("eval", "freeinverse", {"xxxXXXXxxx"}));
  CHECK(j["value"] == "(-1,3,2)");
  CHECK(j["command"] == "eval");
  CHECK(cli::run(config("eval", "bicyclic", {"bbc"})).output == "c^0 b^1\n");
}

TEST_CASE("wp-check", "[cli]") {
  auto eq = cli::run(config("wp-check", "freeinverse", {"xXx", "x"}));
  CHECK(eq.status == 0);
  CHECK(eq.output == "equal\n");
  auto ne = cli::run(config("wp-check", "freeinverse", {"xxxXXXXxxx", "xxxx"}));
  CHECK(ne.status == 1);
  CHECK(ne.output == "not equal\n");
  CHECK(cli::run(config("wp-check", "c2", {"g", "ggg"})).status == 0);
}

TEST_CASE("input errors exit with status 2", "[cli]") {
  CHECK(cli::run(config("eval", "freeinverse", {})).status == 2);
  CHECK(cli::run(config("eval", "", {"x"})).status == 2);
  CHECK(cli::run(config("eval", "/nonexistent/model", {"x"})).status == 2);
  CHECK(cli::run(config("eval", "freeinverse", {"xq"})).status == 2);
  CHECK(cli::run(config("launch")).status == 2);
  auto bad = write_temp("bad.afsa", "alphabet: x X\nstates: q\nstart: p\n");
  auto c   = config("afsa-accept", {}, {"x", "x"});
  c.afsa   = bad;
  auto r   = cli::run(c);
  CHECK(r.status == 2);
  CHECK(r.diagnostics.find("line 3") != std::string::npos);
}

TEST_CASE("automaton commands", "[cli]") {
  auto path = write_temp("universal.afsa", serialize_afsa(test::universal_afsa("xX")));
  auto c    = config("afsa-accept", {}, {"xX", "x"});
  c.afsa    = path;
  CHECK(cli::run(c).status == 0);
  auto j = run_json(c);
  CHECK(j["accepted"] == true);
  CHECK(j["run"].size() == 3);

  auto diag = write_temp("diag.afsa", "alphabet: x X\nstates: q0\nstart: q0\nfinal: q0\n"
                                      "trans: q0 x x q0\ntrans: q0 X X q0\n");
  c.afsa = diag;
  CHECK(cli::run(c).status == 1);

  auto e    = config("afsa-enum");
  e.afsa    = diag;
  e.max_len = 1;
  CHECK(cli::run(e).output == "(, )\n(X, X)\n(x, x)\n");

  auto cay = cli::run(config("cayley-afsa", "c2"));
  CHECK(cay.status == 0);
  CHECK(cay.output.find("states: (_,_) (_,0) (_,1) (0,_) (0,0)") != std::string::npos);

  auto dot = cli::run(config("export-dot", "c2"));
  CHECK(dot.output.starts_with("digraph"));
}

TEST_CASE("wp-enum", "[cli]") {
  auto c    = config("wp-enum", "c2");
  c.max_len = 2;
  CHECK(cli::run(c).output == "(g, g)\n(gg, gg)\n");
  c.max_len = 0;
  CHECK(cli::run(c).status == 2);
}

TEST_CASE("refute-fi", "[cli]") {
  auto path = write_temp("universal2.afsa", serialize_afsa(test::universal_afsa("xX")));
  auto c    = config("refute-fi");
  c.afsa    = path;
  auto r    = cli::run(c);
  CHECK(r.status == 0);
  CHECK(r.output.find("kind: accepted-invalid-pair\n") != std::string::npos);
  CHECK(r.output.find("verified: true\n") != std::string::npos);
  auto j = run_json(c);
  CHECK(j["verified"] == true);
  CHECK(j["i"].get<int>() >= 1);

  auto seeded = config("refute-fi");
  seeded.seed = 42;
  auto first  = cli::run(seeded);
  CHECK(first.status == 0);
  CHECK(cli::run(seeded).output == first.output);
  seeded.format = OutputFormat::json;
  CHECK(cli::run(seeded).output == cli::run(seeded).output);

  auto no_input = config("refute-fi");
  CHECK(cli::run(no_input).status == 2);
}

TEST_CASE("classify", "[cli]") {
  auto j = run_json(config("classify", {}, {"5; 1->2, 3->4, 4->5, 5->3"}));
  CHECK(j["index"] == 2);
  CHECK(j["period"] == 3);
  CHECK(j["closure_size"] == 7);
  CHECK(j["closure_complete"] == true);
  CHECK(j["certificate"]["equal"] == true);

  auto one = run_json(config("classify", {}, {"1; 1->1"}));
  CHECK(one["index"] == 1);
  CHECK(one["period"] == 1);
  CHECK(one["closure_size"] == 1);

  CHECK(run_json(config("classify", {}, {"2; 1->2"}))["closure_size"] == 5);

  auto capped = config("classify", {}, {"4; 1->2, 2->3, 3->4"});
  capped.cap  = 3;
  auto p      = run_json(capped);
  CHECK(p["closure_complete"] == false);
  CHECK(p["closure_size"] == 3);
}

TEST_CASE("JSON output is deterministic and key-sorted", "[cli]") {
  auto c    = config("wp-enum", "freeinverse");
  c.max_len = 3;
  c.format  = OutputFormat::json;
  auto a    = cli::run(c).output;
  CHECK(a == cli::run(c).output);
  auto doc = nlohmann::json::parse(a);
  CHECK(doc.dump(2) + "\n" == a);
  for (auto const& pair : doc["pairs"]) {
    CHECK(pair.size() == 2);
  }
}
