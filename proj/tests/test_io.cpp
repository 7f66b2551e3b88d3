#include <doctest.h>

#include "fixtures.hpp"
#include "tribilliards/census.hpp"
#include "tribilliards/io.hpp"

using namespace tribilliards;

TEST_CASE("format detection") {
  CHECK(detect_format("# gridpoly v1\nt 0 0 u\n") == InputFormat::GridPoly);
  CHECK(detect_format("# gridcomplex v1\n") == InputFormat::GridComplex);
  CHECK(detect_format("# word v1\nw NESEW\n") == InputFormat::Word);
  CHECK(detect_format("t 0 0 u") == InputFormat::GridPoly);
  CHECK(detect_format("# a comment\nv 0 0 0\n") == InputFormat::GridComplex);
  CHECK(detect_format("w NESEW") == InputFormat::Word);
  CHECK(format_from_name("gridpoly") == InputFormat::GridPoly);
  CHECK_FALSE(format_from_name("svg"));
}

TEST_CASE("gridpoly and word inputs") {
  auto x = parse_complex("t 0 0 u");
  CHECK(x.face_count() == 1);
  CHECK(perimeter(x) == 3);

  auto w = parse_complex("w NESEW");
  CHECK(isomorphic(w, x));
  CHECK(isomorphic(complex_from_word("ESESWWNWNE"), fixtures::hexagon()));
  CHECK(isomorphic(complex_from_word("SWWNWNEESE"), fixtures::hexagon()));

  CHECK_THROWS_WITH_AS(complex_from_word("ENENE"), doctest::Contains("open boundary"), ParseError);
  CHECK_THROWS_WITH_AS(complex_from_word("ENEWSW"), doctest::Contains("clockwise"), ParseError);
  // Two unit triangles touching at a vertex traced as one loop.
  CHECK_THROWS_WITH_AS(complex_from_word("NESEWSWNWE"), doctest::Contains("self-intersecting"), ParseError);
  CHECK_THROWS_AS(complex_from_word("NEX"), ParseError);
}

TEST_CASE("gridcomplex input") {
  const char* hex =
      "# gridcomplex v1\n"
      "v 0 0 0\nv 1 1 0\nv 2 0 1\nv 3 -1 1\nv 4 -1 0\nv 5 0 -1\nv 6 1 -1\n"
      "f 0 1 2\nf 0 2 3\nf 0 3 4\nf 0 4 5\nf 0 5 6\nf 0 6 1\n";
  auto x = parse_complex(hex);
  CHECK(x.vertex_count() == 7);
  CHECK(x.face_count() == 6);
  CHECK(perimeter(x) == 6);
  CHECK(isomorphic(x, fixtures::hexagon()));
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_complex("# gridpoly v1\nt 0 0 u\nt 1 x u\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_complex("t 0 0 q"), ParseError);
  CHECK_THROWS_AS(parse_complex("v 0 0 0\nf 0 1 2\n"), std::exception);
  CHECK_THROWS_AS(parse_complex("v 0 0 0\nv 0 1 1\n"), std::exception);
  CHECK_THROWS_AS(parse_complex("t 0 0 u\nt 0 0 u\n"), InvalidComplexError);
}

TEST_CASE("invalid complexes are rejected with their report") {
  // Two faces folded onto the same triangle.
  try {
    parse_complex("v 0 0 0\nv 1 1 0\nv 2 0 1\nv 3 0 1\nf 0 1 2\nf 0 1 3\n");
    FAIL("expected a validation failure");
  } catch (const InvalidComplexError& e) {
    CHECK(e.report().has(Condition::Diamond));
  }
}

TEST_CASE("serialization round trips on the polyiamond corpus") {
  for (const auto& x : enumerate_polyiamonds(7)) {
    CHECK(isomorphic(parse_complex(serialize_gridcomplex(x)), x));
    CHECK(isomorphic(parse_complex(serialize_gridpoly(x)), x));
    CHECK(isomorphic(parse_complex(serialize_word(x)), x));
    CHECK(serialize_gridcomplex(parse_complex(serialize_gridcomplex(x))) == serialize_gridcomplex(x));
  }
  CHECK(serialize_gridcomplex(fixtures::unit_triangle()) ==
        "# gridcomplex v1\nv 0 0 0\nv 1 0 1\nv 2 1 0\nf 0 1 2\n");
}

TEST_CASE("removed= trailer lines are ignored") {
  auto x = parse_complex("# gridcomplex v1\nv 0 0 0\nv 1 0 1\nv 2 1 0\nf 0 1 2\nremoved=5\n");
  CHECK(x.face_count() == 1);
}
