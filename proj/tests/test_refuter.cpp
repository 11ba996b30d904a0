#include <catch2/catch_amalgamated.hpp>

#include "rwp/algebra/monogenic.hpp"
#include "rwp/error.hpp"
#include "rwp/refuter.hpp"
#include "rwp/wordproblem.hpp"
#include "support/oracles.hpp"

using namespace rwp;

TEST_CASE("valid pairs", "[refuter]") {
  CHECK(fi_valid_pair(1) == WordPair{"xXx", "x"});
  CHECK(fi_valid_pair(3) == WordPair{"xxxXXXxxx", "xxx"});
  auto p5 = fi_valid_pair(5);
  CHECK(p5.first.size() == 15);
  CHECK(fi_eval_walk(p5.first) == FreeInverseTriple(0, 5, 5));
  CHECK(fi_eval_walk(p5.second) == FreeInverseTriple(0, 5, 5));
  CHECK_THROWS_AS(fi_valid_pair(0), input_error);
}

TEST_CASE("diagonal automaton rejects a valid pair", "[refuter]") {
  auto afsa = free_monoid_afsa("xX");
  auto w    = refute_fi_recognizer(afsa);
  CHECK(w.kind == WitnessKind::rejected_valid_pair);
  CHECK(w.pair == WordPair{"xxXXxx", "xx"});
  CHECK(w.n == 2);
  CHECK_FALSE(w.i);
  CHECK(w.lhs == w.rhs);
  CHECK(verify_witness(afsa, w));
}

TEST_CASE("universal automaton accepts an invalid pair", "[refuter]") {
  auto afsa    = test::universal_afsa("xX");
  auto outcome = analyze_fi_recognizer(afsa);
  auto const& w = outcome.witness;
  REQUIRE(w.kind == WitnessKind::accepted_invalid_pair);
  REQUIRE(w.i);
  REQUIRE(w.j);
  CHECK(*w.i >= 1);
  CHECK(w.lhs.l() == std::int64_t(*w.i));
  CHECK(w.rhs.l() == 0);
  CHECK(w.pair.first
        == repeat("x", w.n) + repeat("X", w.n + *w.i) + repeat("x", w.n));
  CHECK(w.pair.second == repeat("x", w.n + *w.j));
  REQUIRE(outcome.loop);
  CHECK(outcome.loop->consumed1 == *w.i);
  CHECK(outcome.loop->consumed2 == *w.j);
  CHECK(verify_witness(afsa, w));
}

TEST_CASE("Cayley automaton of a finite quotient is refuted", "[refuter]") {
  auto afsa = cayley_afsa(monogenic_table_model(make_type(MonogenicTypeParams::finite(2, 3))));
  auto w    = refute_fi_recognizer(afsa);
  CHECK(w.kind == WitnessKind::accepted_invalid_pair);
  CHECK(w.n == afsa.num_states() + 1);
  CHECK(verify_witness(afsa, w));
}

TEST_CASE("forged and tampered witnesses fail verification", "[refuter]") {
  auto uni = test::universal_afsa("xX");
  auto one = FreeInverseTriple::generator();
  RefutationWitness forged{WitnessKind::accepted_invalid_pair, {"xXx", "x"}, 1, 1, 0, one, one};
  CHECK_FALSE(verify_witness(uni, forged));

  auto afsa = cayley_afsa(monogenic_table_model(make_type(MonogenicTypeParams::finite(1, 2))));
  auto w    = refute_fi_recognizer(afsa);
  REQUIRE(verify_witness(afsa, w));
  auto tampered = w;
  tampered.pair.second += "X";
  CHECK_FALSE(verify_witness(afsa, tampered));
  auto wrong_values = w;
  wrong_values.lhs  = wrong_values.rhs;
  CHECK_FALSE(verify_witness(afsa, wrong_values));

  auto diag     = free_monoid_afsa("xX");
  auto rejected = refute_fi_recognizer(diag);
  auto accepted_instead = rejected;
  accepted_instead.pair = {"xx", "xx"};
  CHECK_FALSE(verify_witness(diag, accepted_instead));
  CHECK_FALSE(verify_witness(diag, {WitnessKind::rejected_valid_pair, {"", "x"}, 1, {}, {}, one, one}));
}

TEST_CASE("refuter preconditions", "[refuter]") {
  CHECK_THROWS_AS(refute_fi_recognizer(free_monoid_afsa("ab")), input_error);
  CHECK_THROWS_AS(refute_fi_recognizer(free_monoid_afsa("xXy")), input_error);
  CHECK_THROWS_AS(refute_fi_recognizer(free_monoid_afsa("xX"), 0), input_error);
}

TEST_CASE("a short pumping length can be inconclusive", "[refuter]") {
  AfsaBuilder b;
  b.set_start("q0").add_final("q3").add_alphabet("xX");
  b.add_transition("q0", 'x', 'x', "q1");
  b.add_transition("q1", 'X', std::nullopt, "q2");
  b.add_transition("q2", 'x', std::nullopt, "q3");
  auto afsa = b.build();
  REQUIRE(accepts(afsa, fi_valid_pair(1)));
  CHECK_THROWS_AS(refute_fi_recognizer(afsa, 1), inconclusive_error);
  auto w = refute_fi_recognizer(afsa);
  CHECK(w.kind == WitnessKind::rejected_valid_pair);
  CHECK(verify_witness(afsa, w));
}

TEST_CASE("witness serialization", "[refuter]") {
  auto uni = refute_fi_recognizer(test::universal_afsa("xX"));
  CHECK(parse_witness(serialize_witness(uni)) == uni);
  auto diag = refute_fi_recognizer(free_monoid_afsa("xX"));
  auto text = serialize_witness(diag);
  CHECK(text.find("kind: rejected-valid-pair\n") != std::string::npos);
  CHECK(text.find("lhs: (0,2,2)\n") != std::string::npos);
  CHECK(parse_witness(text) == diag);
  CHECK_THROWS_AS(parse_witness("kind: nonsense\n"), input_error);
}

TEST_CASE("refuter suite", "[refuter][property]") {
  std::size_t rejected = 0, pumped = 0;
  for (auto const& [name, afsa] : test::refuter_suite()) {
    INFO(name);
    auto outcome = analyze_fi_recognizer(afsa);
    auto const& w = outcome.witness;
    CHECK(verify_witness(afsa, w));
    if (w.kind == WitnessKind::rejected_valid_pair) {
      ++rejected;
      continue;
    }
    ++pumped;
    REQUIRE(outcome.loop);
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(accepts(afsa, pump(*outcome.loop, k)));
    }
  }
  // Both branches of the argument are exercised.
  CHECK(rejected > 0);
  CHECK(pumped > 0);
}
