#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribilliards/complex.hpp"

namespace tribilliards {

// A maximal west-to-east run of faces joined through their label-2/3 edges.
struct Strip {
  std::vector<FaceId> faces;  // west to east, orientations alternate
  Orientation start = Orientation::Up;
  std::vector<VertexId> bottom_row;  // west to east
  std::vector<VertexId> top_row;
  std::vector<EdgeId> bottom_edges;  // label-1 edges of the up faces
  std::vector<EdgeId> top_edges;     // label-1 edges of the down faces

  std::size_t length() const { return faces.size(); }
  std::size_t bottom_length() const { return bottom_edges.size(); }
  std::size_t top_length() const { return top_edges.size(); }
};

// Strips sorted by the image of their westmost face.
std::vector<Strip> strip_decomposition(const GridComplex& x);

// strip index per face
std::vector<std::size_t> strip_index(const std::vector<Strip>& strips, std::size_t face_count);

// `lower`'s top edges [lower_offset, lower_offset + length) are identified with
// `upper`'s bottom edges [upper_offset, upper_offset + length).
struct StripGlue {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t lower_offset = 0;
  std::size_t upper_offset = 0;
  std::size_t length = 0;

  auto operator<=>(const StripGlue&) const = default;
};

// Identifies one vertex of each strip. Positions count the bottom row west to
// east first, then the top row.
struct StripWedge {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t first_position = 0;
  std::size_t second_position = 0;

  auto operator<=>(const StripWedge&) const = default;
};

struct StripTree {
  std::vector<Strip> strips;
  std::vector<StripGlue> glues;
};

struct StripShape {
  std::size_t length = 1;
  Orientation start = Orientation::Up;

  std::size_t ups() const { return start == Orientation::Up ? (length + 1) / 2 : length / 2; }
  std::size_t downs() const { return length - ups(); }
  auto operator<=>(const StripShape&) const = default;
};

struct StripTreeSpec {
  std::vector<StripShape> strips;
  std::vector<StripGlue> glues;
  std::vector<StripWedge> wedges;
};

class StripSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requires an indecomposable complex. Throws InvalidComplexError when the strip
// graph is not a tree or a shared run does not join two boundary vertices
// through interior ones.
StripTree strip_tree(const GridComplex& x);

StripTreeSpec to_spec(const StripTree& tree);

// Glues and wedges the strips, then recovers the grid map with the first strip
// anchored at the origin.
GridComplex build_from_strip_tree(const StripTreeSpec& spec);

std::string serialize_striptree(const StripTreeSpec& spec);
StripTreeSpec parse_striptree(std::string_view text);

}  // namespace tribilliards
