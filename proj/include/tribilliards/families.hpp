#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tribilliards/complex.hpp"

namespace tribilliards {

enum class Family { Rhombus, CutRhombus, Trunc4k1, Trunc4k3, HexagonTree };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct FamilySpec {
  Family family = Family::Rhombus;
  int k = 1;
  // hexagon_tree only: parents[i] is the parent of hexagon i + 1. When empty,
  // k hexagons are chained in a path.
  std::vector<std::size_t> parents;
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// rhombus: side k (k >= 1), horizontal sides at the bottom.
// cut_rhombus: side k + 2 with the unit triangles at both acute corners removed (k >= 0).
// trunc_4k3: side k + 1 without the upper acute corner triangle (k >= 0).
// trunc_4k1: side k + 1 without the upper acute unit corner and the size-2
//   triangle at the lower acute corner (k >= 1).
GridComplex make_family(const FamilySpec& spec);

GridComplex hexagon_tree(const std::vector<std::size_t>& parents);

// "0,0,1" -> {0, 0, 1}; "" -> {}.
std::vector<std::size_t> parse_parent_list(std::string_view text);

}  // namespace tribilliards
