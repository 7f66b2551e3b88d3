#pragma once

#include <vector>

#include "tribilliards/complex.hpp"

namespace fixtures {

using tribilliards::GridComplex;
using tribilliards::GridTriangle;
using tribilliards::Orientation;

inline GridComplex unit_triangle() { return GridComplex::from_triangles(std::vector<GridTriangle>{{0, 0, Orientation::Up}}); }

// The six triangles around the origin.
inline std::vector<GridTriangle> hexagon_triangles(int a = 0, int b = 0) {
  return {{a, b, Orientation::Up},         {a - 1, b, Orientation::Up},   {a, b - 1, Orientation::Up},
          {a - 1, b, Orientation::Down},   {a - 1, b - 1, Orientation::Down}, {a, b - 1, Orientation::Down}};
}

inline GridComplex hexagon() { return GridComplex::from_triangles(hexagon_triangles()); }

inline GridComplex rhombus(int k) {
  std::vector<GridTriangle> t;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      t.push_back({a, b, Orientation::Up});
      t.push_back({a, b, Orientation::Down});
    }
  return GridComplex::from_triangles(t);
}

// Hexagons centred at the origin and at (1,1); they share the pane (1,0)-(0,1).
inline GridComplex two_hexagons() {
  auto t = hexagon_triangles();
  auto u = hexagon_triangles(1, 1);
  t.insert(t.end(), u.begin(), u.end());
  return GridComplex::from_triangles(t);
}

// A strip of `len` faces starting with an up triangle at the origin.
inline GridComplex strip(int len) {
  std::vector<GridTriangle> t;
  for (int i = 0; i < len; ++i) t.push_back({i / 2, 0, i % 2 == 0 ? Orientation::Up : Orientation::Down});
  return GridComplex::from_triangles(t);
}

}  // namespace fixtures
