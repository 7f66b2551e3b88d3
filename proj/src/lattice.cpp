#include "tribilliards/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace tribilliards {

std::array<GridVertex, 3> role_offsets(Orientation o) {
  if (o == Orientation::Up) return {GridVertex{0, 0}, GridVertex{1, 0}, GridVertex{0, 1}};
  return {GridVertex{1, 0}, GridVertex{0, 1}, GridVertex{1, 1}};
}

std::array<GridVertex, 3> GridTriangle::vertices() const {
  auto off = role_offsets(orientation);
  GridVertex base{a, b};
  return {base + off[0], base + off[1], base + off[2]};
}

PaneLabel pane_label(GridVertex p, GridVertex q) {
  GridVertex d = q - p;
  if (d.b == 0 && (d.a == 1 || d.a == -1)) return PaneLabel(1);
  if (d.a == 0 && (d.b == 1 || d.b == -1)) return PaneLabel(2);
  if ((d.a == 1 && d.b == -1) || (d.a == -1 && d.b == 1)) return PaneLabel(3);
  throw NotAPaneError("not a pane: vertices are not grid-adjacent");
}

namespace {
PaneLabel shift(PaneLabel l, int by) { return PaneLabel(((l.value() - 1 + by) % 3 + 3) % 3 + 1); }
}  // namespace

PaneLabel exit_label(PaneLabel entering, Orientation orientation) {
  return shift(entering, orientation == Orientation::Up ? -1 : 1);
}

PaneLabel reverse_exit_label(PaneLabel entering, Orientation orientation) {
  return exit_label(entering, opposite(orientation));
}

std::array<int, 2> label_roles(Orientation o, PaneLabel label) {
  // up: 1 = bottom (0,1), 2 = left (0,2), 3 = right (1,2)
  // down: 1 = top (1,2), 2 = right (0,2), 3 = left (0,1)
  if (o == Orientation::Up) {
    switch (label.value()) {
      case 1: return {0, 1};
      case 2: return {0, 2};
      default: return {1, 2};
    }
  }
  switch (label.value()) {
    case 1: return {1, 2};
    case 2: return {0, 2};
    default: return {0, 1};
  }
}

Point2 embed(GridVertex v) {
  return {v.a + 0.5 * v.b, v.b * (std::sqrt(3.0) / 2.0)};
}

std::optional<GridTriangle> triangle_through(GridVertex p, GridVertex q, GridVertex r) {
  std::array<GridVertex, 3> pts{p, q, r};
  std::sort(pts.begin(), pts.end());
  if (pts[0] == pts[1] || pts[1] == pts[2]) return std::nullopt;
  for (Orientation o : {Orientation::Up, Orientation::Down}) {
    auto off = role_offsets(o);
    GridVertex anchor = pts[0] - *std::min_element(off.begin(), off.end());
    GridTriangle t{anchor.a, anchor.b, o};
    auto tv = t.vertices();
    std::sort(tv.begin(), tv.end());
    if (tv == pts) return t;
  }
  return std::nullopt;
}

std::optional<BeamDirection> classify_direction(GridVertex d) {
  if (d.a == 0 && d.b > 0) return BeamDirection::Deg60;
  if (d.b == 0 && d.a < 0) return BeamDirection::Deg180;
  if (d.a > 0 && d.a == -d.b) return BeamDirection::Deg300;
  return std::nullopt;
}

GridVertex step_vector(Step s) {
  static constexpr std::array<GridVertex, 6> v = {
      GridVertex{1, 0}, GridVertex{0, 1}, GridVertex{-1, 1},
      GridVertex{-1, 0}, GridVertex{0, -1}, GridVertex{1, -1}};
  return v[static_cast<int>(s)];
}

std::optional<Step> step_of(GridVertex delta) {
  for (Step s : kAllSteps)
    if (step_vector(s) == delta) return s;
  return std::nullopt;
}

std::string_view step_token(Step s) {
  static constexpr std::array<std::string_view, 6> t = {"E", "NE", "NW", "W", "SW", "SE"};
  return t[static_cast<int>(s)];
}

}  // namespace tribilliards
