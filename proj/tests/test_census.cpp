#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tribilliards/census.hpp"
#include "tribilliards/families.hpp"
#include "tribilliards/io.hpp"

using namespace tribilliards;

TEST_CASE("small enumerations") {
  CHECK(enumerate_polyiamonds(1).size() == 1);
  auto three = enumerate_polyiamonds(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].area() == 1);
  CHECK(three[1].area() == 2);
  CHECK(three[2].area() == 3);
  CHECK(enumerate_polyiamonds(0).empty());
}

TEST_CASE("polyiamond census agrees with the reference enumeration") {
  const int n = 10;
  auto reference = oracle::free_hole_free(n);
  std::vector<std::set<std::vector<oracle::Tri>>> ours(n + 1);
  for (const auto& x : enumerate_polyiamonds(n)) {
    CHECK(GridComplex::validate(x.images(), x.raw_faces()).valid());
    CHECK(component_count(x) == 1);
    ours[x.area()].insert(oracle::free_form(oracle::cells_of(x)));
  }
  for (int a = 1; a <= n; ++a) {
    CHECK_MESSAGE(ours[a].size() == reference[a].size(), "area " << a);
    CHECK(ours[a] == reference[a]);
  }
  // all polyiamonds, holes included
  const std::vector<std::size_t> free_counts{1, 1, 1, 3, 4, 12, 24, 66, 160, 448};
  std::vector<std::size_t> counts(n + 1);
  for (const auto& p : enumerate_polyiamond_shapes(n)) ++counts[p.size()];
  for (int a = 1; a <= n; ++a) CHECK(counts[a] == free_counts[a - 1]);
}

TEST_CASE("enumeration order is deterministic and canonical") {
  auto a = enumerate_polyiamond_shapes(7);
  auto b = enumerate_polyiamond_shapes(7);
  CHECK(a == b);
  for (const auto& p : a) CHECK(canonical_polyiamond(p) == p);
  for (std::size_t i = 1; i < a.size(); ++i)
    CHECK((a[i - 1].size() < a[i].size() || (a[i - 1].size() == a[i].size() && a[i - 1] < a[i])));
}

TEST_CASE("hexagon trees") {
  CHECK(is_hexagon_tree(fixtures::hexagon()));
  CHECK_FALSE(is_hexagon_tree(fixtures::unit_triangle()));
  CHECK_FALSE(is_hexagon_tree(GridComplex()));
  auto two = fixtures::two_hexagons();
  CHECK(is_hexagon_tree(two));
  CHECK(billiards_permutation(two).cyc() == 3);
  CHECK_FALSE(is_hexagon_tree(fixtures::rhombus(3)));
  CHECK_FALSE(is_hexagon_tree(make_family({Family::CutRhombus, 1, {}})));
}

TEST_CASE("bound verification") {
  auto six = verify_bounds(6, BoundKind::Both);
  CHECK(six.violations.empty());
  REQUIRE(six.equality_cases.size() == 1);
  CHECK(six.equality_cases[0].perimeter_equality);
  CHECK(six.equality_cases[0].area_equality);
  CHECK(six.equality_cases[0].area == 6);

  // the unit triangle is strict: 4 < 5 and 6 < 7
  auto tri = verify_corpus({fixtures::unit_triangle()}, BoundKind::Both);
  CHECK(tri.violations.empty());
  CHECK(tri.equality_cases.empty());

  auto ten = verify_bounds(10, BoundKind::Both, 3);
  CHECK(ten.violations.empty());
  CHECK(ten.corpus_size == 715);
  CHECK(ten.render() == verify_bounds(10, BoundKind::Both, 1).render());
  CHECK(ten.header().find("violations=0") != std::string::npos);
}

TEST_CASE("equality families pass verification") {
  std::vector<GridComplex> family;
  for (int k = 0; k <= 3; ++k) family.push_back(make_family({Family::CutRhombus, k, {}}));
  for (auto parents : std::vector<std::vector<std::size_t>>{{0}, {0, 1}, {0, 0, 0}}) family.push_back(hexagon_tree(parents));
  auto rep = verify_corpus(family, BoundKind::Both);
  CHECK(rep.violations.empty());
  CHECK(rep.perimeter_equalities == family.size());
  CHECK(rep.area_equalities == 4);
  CHECK(rep.primitive_perimeter_equalities == 4);
}

TEST_CASE("perimeter-6 loop census") {
  // Burnside count of 6-letter necklaces with two each of three letters.
  std::string letters = "aabbcc";
  std::size_t fixed_total = 0, total = 0;
  std::sort(letters.begin(), letters.end());
  do {
    ++total;
    for (int r = 0; r < 6; ++r) {
      std::string s = letters;
      std::rotate(s.begin(), s.begin() + r, s.end());
      fixed_total += s == letters;
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  CHECK(total == 90);
  const std::size_t necklaces = fixed_total / 6;

  auto c = census_perim6_loops(8);
  CHECK(c.loop_count() == necklaces);
  CHECK(c.periodic_loops == 2);
  CHECK(c.same_orientation == 0);
  CHECK(c.only_three_exceptions.empty());
  CHECK(c.only_three_cycles >= 3);  // up triangle, down triangle, hexagon
  for (const auto& w : c.loops) {
    CHECK(w.size() == 10);
    CHECK(std::count(w.begin(), w.end(), 'W') == 2);
  }
}

TEST_CASE("strip-tree complexes") {
  auto all = enumerate_strip_tree_complexes(6);
  std::set<std::string> forms;
  for (const auto& x : all) {
    CHECK(component_count(x) == 1);
    CHECK(forms.insert(canonical_form(x)).second);
    auto type = billiards_permutation(x).cycle_type();
    if (std::all_of(type.begin(), type.end(), [](std::size_t l) { return l == 3; }))
      CHECK((x.area() == 1 || (x.area() == 6 && is_hexagon_tree(x))));
  }
  // every simple polyiamond up to translation is among them
  std::size_t simple = 0;
  for (const auto& x : all) {
    std::set<GridTriangle> images;
    for (const auto& f : x.faces()) images.insert(f.image);
    simple += images.size() == x.face_count() && x.vertex_count() == std::set<GridVertex>(x.images().begin(), x.images().end()).size();
  }
  auto fixed = oracle::fixed_polyiamonds(6);
  std::size_t fixed_hole_free = std::count_if(fixed.begin(), fixed.end(), [](const auto& p) { return !oracle::has_hole(p); });
  CHECK(simple == fixed_hole_free);
}

TEST_CASE("boundary ambiguity") {
  CHECK(search_boundary_ambiguous(6).empty());
  auto pairs = search_boundary_ambiguous(11);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& [a, b] : pairs) {
    CHECK(canonical_boundary_word(a) == canonical_boundary_word(b));
    CHECK(aligned_permutation(a) != aligned_permutation(b));
  }
  const auto& [a, b] = pairs.front();
  CHECK(permutation_report(a, billiards_permutation(a)) != permutation_report(b, billiards_permutation(b)));
}
