#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tribilliards {

// Axial coordinates on the triangular grid: e1 = (1,0) points along 0 degrees,
// e2 = (0,1) along 60 degrees.
struct GridVertex {
  int a = 0;
  int b = 0;

  constexpr auto operator<=>(const GridVertex&) const = default;

  constexpr GridVertex operator+(GridVertex o) const { return {a + o.a, b + o.b}; }
  constexpr GridVertex operator-(GridVertex o) const { return {a - o.a, b - o.b}; }
  constexpr GridVertex operator-() const { return {-a, -b}; }
  constexpr GridVertex operator*(int k) const { return {a * k, b * k}; }
};

enum class Orientation : std::uint8_t { Up, Down };

constexpr Orientation opposite(Orientation o) {
  return o == Orientation::Up ? Orientation::Down : Orientation::Up;
}

constexpr char orientation_char(Orientation o) { return o == Orientation::Up ? 'u' : 'd'; }

// up(a,b)   = {(a,b), (a+1,b), (a,b+1)}
// down(a,b) = {(a+1,b), (a,b+1), (a+1,b+1)}
// vertices() returns them in exactly that order; the position in that list is
// the vertex "role" used throughout the library.
struct GridTriangle {
  int a = 0;
  int b = 0;
  Orientation orientation = Orientation::Up;

  constexpr auto operator<=>(const GridTriangle&) const = default;

  std::array<GridVertex, 3> vertices() const;
  GridVertex anchor() const { return {a, b}; }
};

// Offset of each role from the anchor of a triangle with the given orientation.
std::array<GridVertex, 3> role_offsets(Orientation o);

// Label of a pane by the direction of its image: 1 at 0 degrees, 2 at 60, 3 at 120.
class PaneLabel {
 public:
  constexpr PaneLabel() = default;
  constexpr explicit PaneLabel(int v) : value_(v) {
    if (v < 1 || v > 3) throw std::invalid_argument("pane label must be 1, 2 or 3");
  }
  constexpr int value() const { return value_; }
  constexpr auto operator<=>(const PaneLabel&) const = default;

 private:
  int value_ = 1;
};

enum class BeamDirection : std::uint8_t { Deg60 = 0, Deg180 = 1, Deg300 = 2 };

constexpr int degrees(BeamDirection d) {
  switch (d) {
    case BeamDirection::Deg60: return 60;
    case BeamDirection::Deg180: return 180;
    case BeamDirection::Deg300: return 300;
  }
  return 0;
}

class NotAPaneError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

PaneLabel pane_label(GridVertex p, GridVertex q);

// Combinatorial reflection rule: a beam entering a triangle through the edge
// labelled `entering` leaves through label-1 in an up triangle and label+1 in a
// down triangle (cyclically on {1,2,3}).
PaneLabel exit_label(PaneLabel entering, Orientation orientation);

// The same rule run backwards (a beam traversed in reverse).
PaneLabel reverse_exit_label(PaneLabel entering, Orientation orientation);

// Role indices (into GridTriangle::vertices()) of the endpoints of the edge with
// the given label.
std::array<int, 2> label_roles(Orientation o, PaneLabel label);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

Point2 embed(GridVertex v);

// Returns the grid triangle whose vertex set is {p,q,r}, if there is one.
std::optional<GridTriangle> triangle_through(GridVertex p, GridVertex q, GridVertex r);

// Exact direction class of a displacement. Works on any integer multiple of the
// axial displacement (callers pass doubled midpoints).
std::optional<BeamDirection> classify_direction(GridVertex delta);

// The six unit steps, counterclockwise from east.
enum class Step : std::uint8_t { E = 0, NE, NW, W, SW, SE };

constexpr std::array<Step, 6> kAllSteps = {Step::E, Step::NE, Step::NW, Step::W, Step::SW, Step::SE};

GridVertex step_vector(Step s);
std::optional<Step> step_of(GridVertex delta);
std::string_view step_token(Step s);

// z-component of the cross product of two axial vectors; its sign agrees with
// the Cartesian cross product because the embedding has positive determinant.
constexpr long long cross(GridVertex u, GridVertex v) {
  return static_cast<long long>(u.a) * v.b - static_cast<long long>(u.b) * v.a;
}

}  // namespace tribilliards
