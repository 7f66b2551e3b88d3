#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "tribilliards/billiards.hpp"
#include "tribilliards/census.hpp"
#include "tribilliards/io.hpp"

using namespace tribilliards;

namespace {

GridComplex wedged_triangles() {
  // up(0,0) and down(-1,-1) meet only at the origin.
  return GridComplex({{0, 0}, {1, 0}, {0, 1}, {0, -1}, {-1, 0}}, {{0, 1, 2}, {3, 4, 0}});
}

GridComplex chain_of_three() {
  // up(0,0), up(1,-1) and up(2,-2) share corners in a row.
  return GridComplex::from_triangles(std::vector<GridTriangle>{
      {0, 0, Orientation::Up}, {1, -1, Orientation::Up}, {2, -2, Orientation::Up}});
}

// Twelve faces around one vertex whose rim winds twice around its image.
ValidationReport check(std::vector<GridVertex> images, std::vector<std::array<VertexId, 3>> faces) {
  return GridComplex::validate(images, faces);
}

ValidationReport double_fan() {
  const GridVertex rim[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  std::vector<GridVertex> images{{0, 0}};
  for (int j = 0; j < 12; ++j) images.push_back(rim[j % 6]);
  std::vector<std::array<VertexId, 3>> faces;
  for (VertexId j = 0; j < 12; ++j) faces.push_back({0, 1 + j, 1 + (j + 1) % 12});
  return GridComplex::validate(images, faces);
}

}  // namespace

TEST_CASE("validation") {
  CHECK(GridComplex::validate(fixtures::unit_triangle().images(), fixtures::unit_triangle().raw_faces()).valid());
  CHECK(check({}, {}).valid());

  auto folded = check({{0, 0}, {1, 0}, {0, 1}, {0, 1}}, {{0, 1, 2}, {0, 1, 3}});
  CHECK(folded.has(Condition::Diamond));

  auto fan = double_fan();
  CHECK(fan.has(Condition::Hex6));
  CHECK_FALSE(fan.has(Condition::Euler));

  CHECK(check({{0, 0}, {1, 0}, {0, 1}, {5, 5}}, {{0, 1, 2}}).has(Condition::Hom));
  CHECK(check({{0, 0}, {2, 0}, {0, 1}}, {{0, 1, 2}}).has(Condition::Dim));
  // Three faces on one edge.
  auto three = check({{0, 0}, {1, 0}, {0, 1}, {1, -1}, {0, 1}}, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK(three.has(Condition::EdgeCount));
  // Two triangles far apart.
  auto apart = check({{0, 0}, {1, 0}, {0, 1}, {5, 0}, {6, 0}, {5, 1}}, {{0, 1, 2}, {3, 4, 5}});
  CHECK(apart.has(Condition::Connected));
  // The twelve triangles around up(0,0), without it, enclose a hole.
  std::set<GridTriangle> ring;
  for (GridVertex c : {GridVertex{0, 0}, GridVertex{1, 0}, GridVertex{0, 1}})
    for (const auto& t : fixtures::hexagon_triangles(c.a, c.b)) ring.insert(t);
  ring.erase({0, 0, Orientation::Up});
  REQUIRE(ring.size() == 12);
  std::vector<GridTriangle> ts(ring.begin(), ring.end());
  try {
    GridComplex::from_triangles(ts);
    FAIL("expected the ring to be rejected");
  } catch (const InvalidComplexError& e) {
    CHECK(e.report().has(Condition::Euler));
  }
  CHECK(folded.summary().find("diamond") != std::string::npos);
}

TEST_CASE("boundary walk") {
  auto t = fixtures::unit_triangle();
  auto loop = boundary_walk(t);
  REQUIRE(loop.size() == 3);
  CHECK(t.image(loop[0].tail) == GridVertex{0, 0});
  CHECK(boundary_word(loop) == "NESEW");

  CHECK(boundary_walk(fixtures::hexagon()).size() == 6);

  auto w = wedged_triangles();
  auto wl = boundary_walk(w);
  CHECK(wl.size() == 6);
  VertexId origin = 0;
  CHECK(std::count_if(wl.panes.begin(), wl.panes.end(), [&](const Pane& p) { return p.tail == origin; }) == 2);
}

TEST_CASE("boundary loop invariants on the corpus") {
  for (const auto& x : enumerate_polyiamonds(8)) {
    auto loop = boundary_walk(x);
    CHECK(loop.size() == perimeter(x));
    GridVertex sum{};
    for (std::size_t i = 0; i < loop.size(); ++i) {
      sum = sum + loop[i].vector;
      CHECK(loop[i].head == loop[(i + 1) % loop.size()].tail);
      // interior on the right: the third corner of the face is clockwise of the pane
      const auto& f = x.face(loop[i].face);
      for (auto v : f.roles)
        if (v != loop[i].tail && v != loop[i].head)
          CHECK(cross(loop[i].vector, x.image(v) - x.image(loop[i].tail)) < 0);
    }
    CHECK(sum == GridVertex{});
    long long chi = static_cast<long long>(x.vertex_count()) - static_cast<long long>(x.edge_count()) +
                    static_cast<long long>(x.face_count());
    CHECK(chi == 1);
  }
}

TEST_CASE("components") {
  CHECK(component_count(fixtures::unit_triangle()) == 1);
  CHECK(component_count(wedged_triangles()) == 2);

  auto chain = decompose_components(chain_of_three());
  REQUIRE(chain.count() == 3);
  CHECK(chain.tree_edges.size() == 2);
  std::vector<int> degree(3, 0);
  for (auto [a, b] : chain.tree_edges) ++degree[a], ++degree[b];
  std::sort(degree.begin(), degree.end());
  CHECK(degree == std::vector<int>{1, 1, 2});

  auto x = wedge_at_vertex(fixtures::two_hexagons(), 1, fixtures::hexagon(), 3);
  auto d = decompose_components(x);
  std::size_t perim = 0, area = 0, faces = 0;
  for (std::size_t i = 0; i < d.count(); ++i) {
    perim += perimeter(d.components[i]);
    area += d.components[i].area();
    faces += d.faces[i].size();
    CHECK(component_count(d.components[i]) == 1);
  }
  CHECK(perim == perimeter(x));
  CHECK(area == x.area());
  CHECK(faces == x.face_count());
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(fixtures::unit_triangle()));
  CHECK(is_primitive(fixtures::hexagon()));
  CHECK_FALSE(is_primitive(fixtures::two_hexagons()));
  CHECK_FALSE(is_primitive(fixtures::rhombus(2)));
}

TEST_CASE("wedges") {
  auto t = fixtures::unit_triangle();
  auto tt = wedge_at_vertex(t, 0, t, 1);
  CHECK(perimeter(tt) == 6);
  CHECK(component_count(tt) == 2);
  CHECK(billiards_permutation(tt).cyc() == 2);

  auto h = fixtures::hexagon();
  VertexId corner = 0;
  while (!h.is_boundary_vertex(corner)) ++corner;
  auto hh = wedge_at_vertex(h, corner, h, corner);
  CHECK(perimeter(hh) == 12);
  CHECK(billiards_permutation(hh).cyc() == 4);
  CHECK(4 * 4 == perimeter(hh) + 2 * component_count(hh));

  VertexId centre = 0;
  while (h.is_boundary_vertex(centre)) ++centre;
  CHECK_THROWS(wedge_at_vertex(h, centre, t, 0));
}

TEST_CASE("wedging adds cycles and components") {
  auto corpus = enumerate_polyiamonds(5);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); j += 3) {
      const auto& x = corpus[i];
      const auto& y = corpus[j];
      auto loop_x = boundary_walk(x);
      auto loop_y = boundary_walk(y);
      for (std::size_t s = 0; s < loop_x.size(); s += 2) {
        GridComplex w;
        try {
          w = wedge_at_vertex(x, loop_x[s].tail, y, loop_y[0].tail);
        } catch (const InvalidComplexError&) {
          continue;  // the placement folds faces onto a shared edge
        }
        auto pw = billiards_permutation(w);
        CHECK(pw.cyc() == billiards_permutation(x).cyc() + billiards_permutation(y).cyc());
        CHECK(component_count(w) == 2);
        CHECK(4 * pw.cyc() <= perimeter(w) + 2 * component_count(w));
      }
    }
}

TEST_CASE("canonical form is a translation-invariant isomorphism test") {
  auto a = GridComplex::from_triangles(fixtures::hexagon_triangles(0, 0));
  auto b = GridComplex::from_triangles(fixtures::hexagon_triangles(4, -7));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, fixtures::rhombus(2)));
  CHECK(canonical_boundary_word(a) == canonical_boundary_word(b));
}
