#include <catch2/catch_amalgamated.hpp>

#include "rwp/algebra/monogenic.hpp"
#include "rwp/error.hpp"
#include "rwp/wordproblem.hpp"

using namespace rwp;

namespace {

  GeneratedSemigroup left_zero_model() {
    return GeneratedSemigroup(left_zero_semigroup(2),
                              {{'a', FiniteElement{0}}, {'b', FiniteElement{1}}});
  }

  GeneratedSemigroup trivial_model() {
    return GeneratedSemigroup(FiniteSemigroup(std::vector<std::vector<FiniteSemigroup::element_type>>{{0}}), {{'a', FiniteElement{0}}});
  }

  GeneratedSemigroup type_model(std::size_t r, std::size_t s) {
    return monogenic_table_model(make_type(MonogenicTypeParams::finite(r, s)));
  }

  std::vector<GeneratedSemigroup> all_models() {
    return {free_inverse_model(),
            bicyclic_model(),
            free_monoid_model("ab"),
            cyclic_group_model(3),
            left_zero_model(),
            monogenic_model(make_type(MonogenicTypeParams::finite(2, 3))),
            type_model(2, 2)};
  }

  // Brute-force first differing pair in canonical order.
  std::optional<WordPair> first_difference(GeneratedSemigroup const& a,
                                           GeneratedSemigroup const& b,
                                           std::size_t               max_len) {
    std::vector<WordPair> pairs;
    auto words = all_words(a.alphabet(), 1, max_len);
    for (auto const& u : words) {
      for (auto const& v : words) {
        pairs.push_back({u, v});
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto const& p : pairs) {
      if (wp_contains(a, p.first, p.second) != wp_contains(b, p.first, p.second)) {
        return p;
      }
    }
    return std::nullopt;
  }

}  // namespace

TEST_CASE("projection", "[wordproblem]") {
  CHECK(project(free_inverse_model(), "xxxXXXXxxx") == Element(FreeInverseTriple(1, 3, 2)));
  CHECK(project(cyclic_group_model(2), "gg") == Element(FiniteElement{0}));
  CHECK(project(bicyclic_model(), "bbc") == Element(BicyclicElement{0, 1}));
  CHECK_THROWS_AS(project(free_inverse_model(), ""), input_error);
  CHECK_THROWS_AS(project(free_inverse_model(), "xy"), input_error);
}

TEST_CASE("word problem membership", "[wordproblem]") {
  CHECK(wp_contains(free_inverse_model(), "xXx", "x"));
  CHECK_FALSE(wp_contains(free_inverse_model(), "xxxXXXXxxx", "xxxx"));
  CHECK(wp_contains(bicyclic_model(), "bbc", "b"));
}

TEST_CASE("generated semigroups validate generators", "[wordproblem]") {
  CHECK_THROWS_AS(GeneratedSemigroup(BicyclicModel{}, {}), input_error);
  CHECK_THROWS_AS(GeneratedSemigroup(BicyclicModel{}, {{'x', FreeInverseTriple::generator()}}),
                  input_error);
  CHECK_THROWS_AS(GeneratedSemigroup(cyclic_group(2), {{'g', FiniteElement{2}}}), input_error);
  CHECK_THROWS_AS(GeneratedSemigroup(PartialInjectionModel{3}, {{'x', link(2)}}), input_error);
  CHECK_THROWS_AS(GeneratedSemigroup(FreeMonoidModel{}, {{'a', FreeMonoidElement{""}}}),
                  input_error);
  CHECK_THROWS_AS(GeneratedSemigroup(BicyclicModel{}, {{'-', bicyclic_b}}), input_error);
}

TEST_CASE("enumerate_wp", "[wordproblem]") {
  CHECK(enumerate_wp(free_monoid_model("a"), 2) == std::vector<WordPair>{{"a", "a"}, {"aa", "aa"}});

  std::vector<WordPair> parity;
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      if ((i + j) % 2 == 0) {
        parity.push_back({repeat("g", i), repeat("g", j)});
      }
    }
  }
  std::sort(parity.begin(), parity.end());
  CHECK(enumerate_wp(cyclic_group_model(2), 3) == parity);

  auto fi = enumerate_wp(free_inverse_model(), 2);
  CHECK(std::find(fi.begin(), fi.end(), WordPair{"xX", "xX"}) != fi.end());
  CHECK(std::find(fi.begin(), fi.end(), WordPair{"xX", "Xx"}) == fi.end());
  CHECK(std::is_sorted(fi.begin(), fi.end()));
  CHECK_THROWS_AS(enumerate_wp(free_inverse_model(), 0), input_error);
}

TEST_CASE("free monoid automaton", "[wordproblem]") {
  auto one = free_monoid_afsa("a");
  CHECK(one.num_states() == 1);
  CHECK(one.transitions().size() == 1);
  auto ab = free_monoid_afsa("ab");
  CHECK(accepts(ab, {"ab", "ab"}));
  CHECK_FALSE(accepts(ab, {"ab", "ba"}));

  auto words = all_words(ab.alphabet(), 0, 7);
  for (auto const& u : words) {
    for (auto const& v : words) {
      if (accepts(ab, {u, v}) != (u == v)) {
        FAIL(WordPair{u, v});
      }
    }
  }
  CHECK(check_afsa_against_oracle(ab, free_monoid_model("ab"), 6).agrees());
}

TEST_CASE("Cayley automata", "[wordproblem]") {
  auto c2 = cayley_afsa(cyclic_group_model(2));
  CHECK(c2.num_states() == 9);
  CHECK(accepts(c2, {"g", "ggg"}));
  CHECK_FALSE(accepts(c2, {"g", "gg"}));
  CHECK_FALSE(accepts(c2, {"", ""}));

  auto triv = cayley_afsa(trivial_model());
  auto words = all_words(triv.alphabet(), 1, 5);
  for (auto const& u : words) {
    for (auto const& v : words) {
      CHECK(accepts(triv, {u, v}));
    }
  }
  CHECK_THROWS_AS(cayley_afsa(free_inverse_model()), input_error);
}

TEST_CASE("Cayley automata agree with the oracle", "[wordproblem][property]") {
  auto link2 = monogenic_table_model(link(2));
  REQUIRE(std::get<FiniteSemigroup>(link2.model()).size() == 5);
  for (auto const& gs : {cyclic_group_model(2), cyclic_group_model(3), link2, left_zero_model()}) {
    auto report = check_afsa_against_oracle(cayley_afsa(gs), gs, 5);
    CHECK(report.bound == 5);
    CHECK(report.agrees());
  }
}

TEST_CASE("oracle reports", "[wordproblem]") {
  auto report = check_afsa_against_oracle(free_monoid_afsa("xX"), free_inverse_model(), 3);
  CHECK_FALSE(report.agrees());
  CHECK(report.extra_pairs.empty());
  auto const& missed = report.missed_pairs;
  CHECK(std::find(missed.begin(), missed.end(), WordPair{"xXx", "x"}) != missed.end());
  CHECK(std::is_sorted(missed.begin(), missed.end()));
  CHECK_THROWS_AS(check_afsa_against_oracle(free_monoid_afsa("ab"), free_inverse_model(), 2),
                  input_error);
}

TEST_CASE("bounded kernel comparison", "[wordproblem]") {
  CHECK_FALSE(kernel_equal_up_to(type_model(2, 3), type_model(2, 3), 6));

  auto fi_vs_23 = kernel_equal_up_to(free_inverse_model(), type_model(2, 3), 8);
  REQUIRE(fi_vs_23);
  CHECK(wp_contains(free_inverse_model(), fi_vs_23->first, fi_vs_23->second)
        != wp_contains(type_model(2, 3), fi_vs_23->first, fi_vs_23->second));

  auto fm = free_monoid_model("xX");
  auto fi = free_inverse_model();
  auto w  = kernel_equal_up_to(fm, fi, 3);
  REQUIRE(w);
  CHECK(w == first_difference(fm, fi, 3));
  CHECK(w == WordPair{"X", "XxX"});
  CHECK(wp_contains(fm, w->first, w->second) != wp_contains(fi, w->first, w->second));
  CHECK(wp_contains(fm, "xXx", "x") != wp_contains(fi, "xXx", "x"));

  CHECK(kernel_equal_up_to(type_model(2, 2), monogenic_model(make_type({2, 2})), 5)
        == std::nullopt);
  CHECK(kernel_equal_up_to(type_model(3, 1), type_model(2, 2), 4)
        == first_difference(type_model(3, 1), type_model(2, 2), 4));
  CHECK_THROWS_AS(kernel_equal_up_to(fi, bicyclic_model(), 2), input_error);
}

TEST_CASE("Preston types are distinct", "[wordproblem][property]") {
  auto t23 = type_model(2, 3);
  auto t32 = type_model(3, 2);
  auto fi  = free_inverse_model();
  for (auto const& [a, b] : {std::pair{&t23, &t32}, std::pair{&t23, &fi}, std::pair{&t32, &fi}}) {
    auto w = kernel_equal_up_to(*a, *b, 8);
    REQUIRE(w);
    CHECK(w->first.size() <= 8);
    CHECK(w->second.size() <= 8);
    CHECK(wp_contains(*a, w->first, w->second) != wp_contains(*b, w->first, w->second));
  }
}

TEST_CASE("word problems are equivalence relations", "[wordproblem][property]") {
  for (auto const& gs : all_models()) {
    auto words = all_words(gs.alphabet(), 1, gs.alphabet().size() > 1 ? 3 : 4);
    std::vector<Element> proj;
    for (auto const& w : words) {
      proj.push_back(project(gs, w));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(wp_contains(gs, words[i], words[i]));
      for (std::size_t j = 0; j < words.size(); ++j) {
        bool ij = wp_contains(gs, words[i], words[j]);
        CHECK(ij == wp_contains(gs, words[j], words[i]));
        if (!ij) {
          continue;
        }
        for (std::size_t k = 0; k < words.size(); ++k) {
          if (proj[j] == proj[k] && !wp_contains(gs, words[i], words[k])) {
            FAIL(gs.kind() << ": " << words[i] << " " << words[j] << " " << words[k]);
          }
        }
      }
    }
  }
}

TEST_CASE("projection is a homomorphism", "[wordproblem][property]") {
  for (auto const& gs : all_models()) {
    auto words = all_words(gs.alphabet(), 1, 4);
    for (auto const& u : words) {
      for (auto const& v : words) {
        if (project(gs, u + v) != gs.multiply(project(gs, u), project(gs, v))) {
          FAIL(gs.kind() << ": " << u << " " << v);
        }
      }
    }
  }
}
