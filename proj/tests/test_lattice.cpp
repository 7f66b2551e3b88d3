#include <doctest.h>

#include <cmath>
#include <set>

#include <vector>

#include "tribilliards/lattice.hpp"

using namespace tribilliards;

TEST_CASE("pane labels follow the image direction") {
  CHECK(pane_label({0, 0}, {1, 0}).value() == 1);
  CHECK(pane_label({0, 0}, {0, 1}).value() == 2);
  CHECK(pane_label({1, 0}, {0, 1}).value() == 3);
  CHECK(pane_label({1, 0}, {0, 0}).value() == 1);
  CHECK(pane_label({5, -2}, {4, -1}).value() == 3);
  CHECK_THROWS_AS(pane_label({0, 0}, {1, 1}), NotAPaneError);
  CHECK_THROWS_AS(pane_label({0, 0}, {0, 0}), NotAPaneError);
  CHECK_THROWS_AS(pane_label({0, 0}, {2, 0}), NotAPaneError);
}

TEST_CASE("exit labels") {
  CHECK(exit_label(PaneLabel(1), Orientation::Up).value() == 3);
  CHECK(exit_label(PaneLabel(3), Orientation::Down).value() == 1);
  CHECK(exit_label(PaneLabel(2), Orientation::Up).value() == 1);
  CHECK_THROWS(PaneLabel(0));
  CHECK_THROWS(PaneLabel(4));
}

TEST_CASE("exit_label is a bijection and the two orientations invert each other") {
  for (auto o : {Orientation::Up, Orientation::Down}) {
    std::set<int> image;
    for (int l = 1; l <= 3; ++l) {
      image.insert(exit_label(PaneLabel(l), o).value());
      CHECK(exit_label(exit_label(PaneLabel(l), o), opposite(o)).value() == l);
      CHECK(reverse_exit_label(PaneLabel(l), o) == exit_label(PaneLabel(l), opposite(o)));
    }
    CHECK(image == std::set<int>{1, 2, 3});
  }
}

TEST_CASE("one reflection step per edge of an up triangle cycles 1, 3, 2") {
  PaneLabel l(1);
  std::vector<int> seen{l.value()};
  for (int i = 0; i < 3; ++i) {
    l = exit_label(l, Orientation::Up);
    seen.push_back(l.value());
  }
  CHECK(seen == std::vector<int>{1, 3, 2, 1});
}

TEST_CASE("every triangle has one edge of each label") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (auto o : {Orientation::Up, Orientation::Down}) {
        GridTriangle t{a, b, o};
        auto v = t.vertices();
        std::set<int> labels;
        for (int i = 0; i < 3; ++i) labels.insert(pane_label(v[i], v[(i + 1) % 3]).value());
        CHECK(labels == std::set<int>{1, 2, 3});
        for (int l = 1; l <= 3; ++l) {
          auto r = label_roles(o, PaneLabel(l));
          CHECK(pane_label(v[r[0]], v[r[1]]).value() == l);
        }
        auto back = triangle_through(v[2], v[0], v[1]);
        REQUIRE(back);
        CHECK(*back == t);
      }
  CHECK_FALSE(triangle_through({0, 0}, {1, 0}, {1, 1}));
}

TEST_CASE("embedding") {
  CHECK(embed({0, 0}).x == 0.0);
  CHECK(embed({0, 0}).y == 0.0);
  CHECK(embed({1, 0}).x == 1.0);
  CHECK(embed({1, 0}).y == 0.0);
  CHECK(embed({0, 1}).x == doctest::Approx(0.5));
  CHECK(embed({0, 1}).y == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("direction classes") {
  CHECK(classify_direction({0, 3}) == BeamDirection::Deg60);
  CHECK(classify_direction({-2, 0}) == BeamDirection::Deg180);
  CHECK(classify_direction({1, -1}) == BeamDirection::Deg300);
  CHECK_FALSE(classify_direction({1, 0}));
  CHECK_FALSE(classify_direction({0, -1}));
  CHECK_FALSE(classify_direction({1, 1}));
  for (auto s : kAllSteps) CHECK(step_of(step_vector(s)) == s);
  CHECK(step_token(Step::NE) == "NE");
}
