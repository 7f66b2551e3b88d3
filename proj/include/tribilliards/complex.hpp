#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tribilliards/lattice.hpp"

namespace tribilliards {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// A face given by orientation and its vertices in role order (see GridTriangle).
struct OrientedFace {
  Orientation orientation = Orientation::Up;
  std::array<VertexId, 3> roles{};
};

enum class Condition : std::uint8_t { Hom, Dim, EdgeCount, Diamond, Hex6, Link, Euler, Connected };

std::string_view condition_name(Condition c);

struct Violation {
  Condition condition;
  std::string simplex;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(Condition c) const;
  std::string summary() const;
};

class InvalidComplexError : public std::runtime_error {
 public:
  explicit InvalidComplexError(ValidationReport report);
  InvalidComplexError(const std::string& what, ValidationReport report = {});
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  std::array<FaceId, 2> faces{};
  std::uint8_t face_count = 0;
  PaneLabel label;

  bool boundary() const { return face_count == 1; }
};

struct FaceRecord {
  GridTriangle image;
  std::array<VertexId, 3> roles{};
  std::array<EdgeId, 3> edges{};  // indexed by label - 1
};

// A validated generalized grid polygon: a homogeneous 2-complex together with
// its fold-free map to the triangular grid. Immutable once constructed.
class GridComplex {
 public:
  GridComplex() = default;

  // Throws InvalidComplexError when the input violates any condition.
  GridComplex(std::vector<GridVertex> images, std::vector<std::array<VertexId, 3>> faces);

  static ValidationReport validate(std::span<const GridVertex> images,
                                   std::span<const std::array<VertexId, 3>> faces);

  // Simple polygon from unit triangles; vertices are identified by image.
  static GridComplex from_triangles(std::span<const GridTriangle> triangles);

  // Recovers the grid map by propagating positions through the face roles,
  // starting with the first face anchored at `first_anchor`. Throws
  // InvalidComplexError if propagation is inconsistent or the result fails
  // validation.
  static GridComplex realize(std::size_t vertex_count, std::span<const OrientedFace> faces,
                             GridVertex first_anchor = {});

  bool empty() const { return faces_.empty(); }
  std::size_t vertex_count() const { return images_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t area() const { return faces_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t boundary_edge_count() const { return boundary_edges_; }

  GridVertex image(VertexId v) const { return images_[v]; }
  const std::vector<GridVertex>& images() const { return images_; }
  const FaceRecord& face(FaceId f) const { return faces_[f]; }
  const std::vector<FaceRecord>& faces() const { return faces_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<EdgeId> find_edge(VertexId p, VertexId q) const;
  EdgeId face_edge(FaceId f, PaneLabel label) const { return faces_[f].edges[label.value() - 1]; }
  std::optional<FaceId> across(EdgeId e, FaceId from) const;
  std::span<const FaceId> faces_at(VertexId v) const;
  std::span<const EdgeId> edges_at(VertexId v) const;
  bool is_boundary_vertex(VertexId v) const { return boundary_vertex_[v]; }

  std::vector<std::array<VertexId, 3>> raw_faces() const;
  std::vector<OrientedFace> oriented_faces() const;

 private:
  void build();

  std::vector<GridVertex> images_;
  std::vector<FaceRecord> faces_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> edge_keys_;  // sorted; position is the EdgeId
  std::vector<std::size_t> vf_offset_;
  std::vector<FaceId> vf_;
  std::vector<std::size_t> ve_offset_;
  std::vector<EdgeId> ve_;
  std::vector<bool> boundary_vertex_;
  std::size_t boundary_edges_ = 0;
};

// A boundary edge directed so that the interior lies on its right.
struct Pane {
  VertexId tail = 0;
  VertexId head = 0;
  EdgeId edge = 0;
  FaceId face = 0;
  PaneLabel label;
  GridVertex vector;
};

struct BoundaryLoop {
  std::vector<Pane> panes;
  std::vector<std::size_t> index_of_edge;  // kNoIndex for interior edges

  std::size_t size() const { return panes.size(); }
  const Pane& operator[](std::size_t i) const { return panes[i]; }
  std::vector<Step> steps() const;
};

// Clockwise walk over every boundary pane. At a wedge vertex the walk leaves
// through the corner next clockwise (ordered by the image direction of each
// corner's incoming pane). Starts at the pane with the smallest tail image,
// ties broken by label.
BoundaryLoop boundary_walk(const GridComplex& x);

inline std::size_t perimeter(const GridComplex& x) { return x.boundary_edge_count(); }

struct ComponentDecomposition {
  std::vector<GridComplex> components;
  std::vector<std::vector<FaceId>> faces;             // original face ids per component
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::vector<VertexId> wedge_vertices;

  std::size_t count() const { return components.size(); }
};

// Edge-connected face classes; each is a disk. Components meeting at a wedge
// vertex are joined in a star rooted at the first of them so the adjacency
// graph stays a tree when more than two meet at one point.
ComponentDecomposition decompose_components(const GridComplex& x);
std::vector<std::size_t> face_components(const GridComplex& x, std::size_t* count = nullptr);
std::size_t component_count(const GridComplex& x);

bool is_primitive(const GridComplex& x);

GridComplex wedge_at_vertex(const GridComplex& x, VertexId at_x, const GridComplex& y, VertexId at_y);

// Isomorphism invariant up to translation of the image: two complexes with the
// same canonical form are isomorphic through a vertex bijection that commutes
// with the images.
std::string canonical_form(const GridComplex& x);
bool isomorphic(const GridComplex& x, const GridComplex& y);

// Smallest rotation of the boundary step word, e.g. "ENEWSW...". The word is
// translation-invariant.
std::string canonical_boundary_word(const GridComplex& x);
std::string boundary_word(const BoundaryLoop& loop);

}  // namespace tribilliards
