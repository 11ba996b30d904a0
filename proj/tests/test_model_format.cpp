#include <catch2/catch_amalgamated.hpp>

#include "rwp/algebra/monogenic.hpp"
#include "rwp/error.hpp"
#include "rwp/model_format.hpp"

using namespace rwp;

TEST_CASE("model files", "[model-format]") {
  auto c2 = parse_model("# the group of order two\nmodel: finite\nrow: 0 1\nrow: 1 0\ngen: g -> 1\n");
  CHECK(c2 == cyclic_group_model(2));

  auto pj = parse_model("model: pinj\ngen: x -> 2; 1->2\ngen: X -> 2; 2->1\n");
  CHECK(pj == monogenic_model(link(2)));

  auto fi = parse_model("model: freeinverse\ngen: x -> (0,1,1)\ngen: X -> (-1,0,-1)\n");
  CHECK(fi == free_inverse_model());

  CHECK(parse_model("model: bicyclic\ngen: b -> c^0 b^1\ngen: c -> c^1 b^0\n") == bicyclic_model());
  CHECK(parse_model("model: freemonoid\ngen: a -> a\ngen: b -> b\n") == free_monoid_model("ab"));
}

TEST_CASE("model round trip", "[model-format]") {
  for (auto const& gs : {cyclic_group_model(3),
                         free_inverse_model(),
                         bicyclic_model(),
                         free_monoid_model("xy"),
                         monogenic_model(make_type(MonogenicTypeParams::finite(2, 3))),
                         monogenic_table_model(link(3))}) {
    CHECK(parse_model(serialize_model(gs)) == gs);
  }
}

TEST_CASE("model file errors", "[model-format]") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      (void) parse_model(text);
    } catch (parse_error const& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("model: finite\nrow: 0 1\nrow: 1 0\ngen: g -> 7\n") > 0);
  CHECK(line_of("model: groupoid\n") == 1);
  CHECK(line_of("row: 0\n") == 1);
  CHECK(line_of("model: finite\nrow: 0 x\n") == 2);
  CHECK(line_of("model: freeinverse\ngen: x -> (1,1,1)\n") == 2);
  CHECK(line_of("model: freeinverse\ngen x (0,1,1)\n") == 2);
  CHECK(line_of("model: freeinverse\ngen: x -> (0,1,1)\ngen: x -> (0,1,1)\n") == 3);
  CHECK(line_of("model: freeinverse\n") > 0);
  CHECK(line_of("gen: x -> (0,1,1)\n") == 1);
}

TEST_CASE("built-in models", "[model-format]") {
  CHECK(builtin_model("freeinverse") == free_inverse_model());
  CHECK(builtin_model("bicyclic") == bicyclic_model());
  CHECK(builtin_model("freemonoid:a,b") == free_monoid_model("ab"));
  CHECK(builtin_model("c2") == cyclic_group_model(2));
  CHECK(builtin_model("c12") == cyclic_group_model(12));
  CHECK(builtin_model("type:2,3")
        == monogenic_table_model(make_type(MonogenicTypeParams::finite(2, 3))));
  CHECK(builtin_model("pinj-type:2,3")
        == monogenic_model(make_type(MonogenicTypeParams::finite(2, 3))));
  CHECK_FALSE(builtin_model("models/c2.model"));
  CHECK_THROWS_AS(builtin_model("c0"), input_error);
  CHECK_THROWS_AS(builtin_model("type:2"), input_error);
}
