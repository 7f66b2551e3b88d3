#include "tribilliards/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

namespace tribilliards {

namespace {

std::uint64_t edge_key(VertexId p, VertexId q) {
  if (p > q) std::swap(p, q);
  return (static_cast<std::uint64_t>(p) << 32) | q;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::array<GridTriangle, 6> hexagon_around(GridVertex p) {
  return {GridTriangle{p.a, p.b, Orientation::Up},
          GridTriangle{p.a - 1, p.b, Orientation::Up},
          GridTriangle{p.a, p.b - 1, Orientation::Up},
          GridTriangle{p.a - 1, p.b, Orientation::Down},
          GridTriangle{p.a, p.b - 1, Orientation::Down},
          GridTriangle{p.a - 1, p.b - 1, Orientation::Down}};
}

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::Hom: return "hom";
    case Condition::Dim: return "dim";
    case Condition::EdgeCount: return "edge-count";
    case Condition::Diamond: return "diamond";
    case Condition::Hex6: return "hex6";
    case Condition::Link: return "link";
    case Condition::Euler: return "euler";
    case Condition::Connected: return "connected";
  }
  return "?";
}

bool ValidationReport::has(Condition c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.condition == c; });
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += fmt::format("{}: {}", condition_name(v.condition), v.simplex);
  }
  return out;
}

InvalidComplexError::InvalidComplexError(ValidationReport report)
    : std::runtime_error("invalid complex: " + report.summary()), report_(std::move(report)) {}

InvalidComplexError::InvalidComplexError(const std::string& what, ValidationReport report)
    : std::runtime_error(what), report_(std::move(report)) {}

ValidationReport GridComplex::validate(std::span<const GridVertex> images,
                                       std::span<const std::array<VertexId, 3>> faces) {
  ValidationReport report;
  if (images.empty() && faces.empty()) return report;
  auto add = [&](Condition c, std::string what) { report.violations.push_back({c, std::move(what)}); };

  const std::size_t nv = images.size();
  std::vector<std::optional<GridTriangle>> tri(faces.size());
  std::vector<bool> usable(faces.size(), false);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& t = faces[f];
    auto name = fmt::format("face {} ({} {} {})", f, t[0], t[1], t[2]);
    if (t[0] >= nv || t[1] >= nv || t[2] >= nv) {
      add(Condition::Dim, name + " references an unknown vertex");
      continue;
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      add(Condition::Dim, name + " repeats a vertex");
      continue;
    }
    usable[f] = true;
    tri[f] = triangle_through(images[t[0]], images[t[1]], images[t[2]]);
    if (!tri[f]) add(Condition::Dim, name + " is not mapped onto a grid triangle");
  }

  std::vector<std::vector<std::size_t>> vertex_faces(nv);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> edge_faces;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!usable[f]) continue;
    const auto& t = faces[f];
    for (int i = 0; i < 3; ++i) {
      vertex_faces[t[i]].push_back(f);
      edge_faces[edge_key(t[i], t[(i + 1) % 3])].push_back(f);
    }
  }

  for (std::size_t v = 0; v < nv; ++v)
    if (vertex_faces[v].empty()) add(Condition::Hom, fmt::format("vertex {} lies in no face", v));

  std::vector<std::uint64_t> keys;
  keys.reserve(edge_faces.size());
  for (const auto& [k, _] : edge_faces) keys.push_back(k);
  std::sort(keys.begin(), keys.end());

  std::vector<bool> touches_boundary(nv, false);
  for (auto k : keys) {
    const auto& fs = edge_faces[k];
    VertexId p = static_cast<VertexId>(k >> 32), q = static_cast<VertexId>(k & 0xffffffffu);
    auto name = fmt::format("edge ({} {})", p, q);
    if (fs.size() > 2) add(Condition::EdgeCount, fmt::format("{} lies in {} faces", name, fs.size()));
    if (fs.size() != 2) {
      touches_boundary[p] = touches_boundary[q] = true;
    } else if (tri[fs[0]] && tri[fs[1]] && *tri[fs[0]] == *tri[fs[1]]) {
      add(Condition::Diamond, name + " folds: both faces map to the same grid triangle");
    }
  }

  for (std::size_t v = 0; v < nv; ++v) {
    const auto& fs = vertex_faces[v];
    if (fs.empty()) continue;
    // Link graph of v.
    std::map<VertexId, std::size_t> node;
    std::vector<std::pair<std::size_t, std::size_t>> link_edges;
    for (auto f : fs) {
      std::array<VertexId, 2> other{};
      int k = 0;
      for (auto w : faces[f])
        if (w != v) other[k++] = w;
      auto id = [&](VertexId w) { return node.emplace(w, node.size()).first->second; };
      link_edges.emplace_back(id(other[0]), id(other[1]));
    }
    std::vector<int> degree(node.size(), 0);
    DisjointSets ds(node.size());
    for (auto [p, q] : link_edges) {
      ++degree[p];
      ++degree[q];
      ds.unite(p, q);
    }
    std::map<std::size_t, bool> component_is_cycle;
    bool bad_degree = false;
    for (std::size_t i = 0; i < node.size(); ++i) {
      bad_degree |= degree[i] > 2;
      auto [it, fresh] = component_is_cycle.emplace(ds.find(i), true);
      if (degree[i] != 2) it->second = false;
    }
    const bool interior = !touches_boundary[v];
    std::size_t cycles = 0;
    for (auto [_, c] : component_is_cycle) cycles += c ? 1 : 0;
    if (bad_degree) {
      add(Condition::Link, fmt::format("vertex {} has a branching link", v));
    } else if (interior && (component_is_cycle.size() != 1 || cycles != 1)) {
      add(Condition::Link, fmt::format("interior vertex {} has a link with {} components", v,
                                       component_is_cycle.size()));
    } else if (!interior && cycles > 0) {
      add(Condition::Link, fmt::format("boundary vertex {} has a closed link component", v));
    }

    if (interior) {
      bool ok = fs.size() == 6;
      if (ok) {
        std::set<GridTriangle> seen;
        for (auto f : fs)
          if (tri[f]) seen.insert(*tri[f]);
        auto hex = hexagon_around(images[v]);
        ok = seen == std::set<GridTriangle>(hex.begin(), hex.end());
      }
      if (!ok)
        add(Condition::Hex6, fmt::format("interior vertex {} lies in {} faces that do not tile a hexagon",
                                         v, fs.size()));
    }
  }

  DisjointSets ds(nv);
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (usable[f]) {
      ds.unite(faces[f][0], faces[f][1]);
      ds.unite(faces[f][1], faces[f][2]);
    }
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < nv; ++v)
    if (!vertex_faces[v].empty()) roots.insert(ds.find(v));
  if (roots.size() > 1) add(Condition::Connected, fmt::format("{} connected pieces", roots.size()));

  const long long chi = static_cast<long long>(nv) - static_cast<long long>(keys.size()) +
                        static_cast<long long>(faces.size());
  if (chi != 1) add(Condition::Euler, fmt::format("V - E + F = {}", chi));
  return report;
}

GridComplex::GridComplex(std::vector<GridVertex> images, std::vector<std::array<VertexId, 3>> faces) {
  auto report = validate(images, faces);
  if (!report.valid()) throw InvalidComplexError(std::move(report));
  images_ = std::move(images);
  faces_.reserve(faces.size());
  for (const auto& t : faces) {
    FaceRecord rec;
    rec.image = *triangle_through(images_[t[0]], images_[t[1]], images_[t[2]]);
    auto rv = rec.image.vertices();
    for (int r = 0; r < 3; ++r)
      for (auto v : t)
        if (images_[v] == rv[r]) rec.roles[r] = v;
    faces_.push_back(rec);
  }
  build();
}

void GridComplex::build() {
  std::vector<std::pair<std::uint64_t, FaceId>> incid;
  for (FaceId f = 0; f < faces_.size(); ++f) {
    const auto& r = faces_[f].roles;
    for (int i = 0; i < 3; ++i) incid.emplace_back(edge_key(r[i], r[(i + 1) % 3]), f);
  }
  std::sort(incid.begin(), incid.end());
  edges_.clear();
  edge_keys_.clear();
  for (std::size_t i = 0; i < incid.size();) {
    std::size_t j = i;
    Edge e;
    e.u = static_cast<VertexId>(incid[i].first >> 32);
    e.v = static_cast<VertexId>(incid[i].first & 0xffffffffu);
    while (j < incid.size() && incid[j].first == incid[i].first) {
      e.faces[e.face_count++] = incid[j].second;
      ++j;
    }
    e.label = pane_label(images_[e.u], images_[e.v]);
    edge_keys_.push_back(incid[i].first);
    edges_.push_back(e);
    i = j;
  }

  for (auto& rec : faces_) {
    for (int l = 1; l <= 3; ++l) {
      auto [r0, r1] = label_roles(rec.image.orientation, PaneLabel(l));
      rec.edges[l - 1] = *find_edge(rec.roles[r0], rec.roles[r1]);
    }
  }

  const std::size_t nv = images_.size();
  vf_offset_.assign(nv + 1, 0);
  for (const auto& rec : faces_)
    for (auto v : rec.roles) ++vf_offset_[v + 1];
  std::partial_sum(vf_offset_.begin(), vf_offset_.end(), vf_offset_.begin());
  vf_.assign(vf_offset_.back(), 0);
  {
    auto fill = vf_offset_;
    for (FaceId f = 0; f < faces_.size(); ++f)
      for (auto v : faces_[f].roles) vf_[fill[v]++] = f;
  }
  ve_offset_.assign(nv + 1, 0);
  for (const auto& e : edges_) {
    ++ve_offset_[e.u + 1];
    ++ve_offset_[e.v + 1];
  }
  std::partial_sum(ve_offset_.begin(), ve_offset_.end(), ve_offset_.begin());
  ve_.assign(ve_offset_.back(), 0);
  {
    auto fill = ve_offset_;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      ve_[fill[edges_[e].u]++] = e;
      ve_[fill[edges_[e].v]++] = e;
    }
  }
  boundary_vertex_.assign(nv, false);
  boundary_edges_ = 0;
  for (const auto& e : edges_)
    if (e.boundary()) {
      ++boundary_edges_;
      boundary_vertex_[e.u] = boundary_vertex_[e.v] = true;
    }
}

GridComplex GridComplex::from_triangles(std::span<const GridTriangle> triangles) {
  std::map<GridVertex, VertexId> ids;
  std::vector<GridVertex> images;
  std::vector<std::array<VertexId, 3>> faces;
  std::set<GridTriangle> seen;
  for (const auto& t : triangles) {
    if (!seen.insert(t).second)
      throw InvalidComplexError(fmt::format("triangle {} {} {} listed twice", t.a, t.b, orientation_char(t.orientation)));
    std::array<VertexId, 3> f{};
    auto vs = t.vertices();
    for (int i = 0; i < 3; ++i) {
      auto [it, fresh] = ids.emplace(vs[i], static_cast<VertexId>(images.size()));
      if (fresh) images.push_back(vs[i]);
      f[i] = it->second;
    }
    faces.push_back(f);
  }
  return GridComplex(std::move(images), std::move(faces));
}

GridComplex GridComplex::realize(std::size_t vertex_count, std::span<const OrientedFace> faces,
                                 GridVertex first_anchor) {
  if (faces.empty()) {
    if (vertex_count != 0) throw InvalidComplexError("vertices without faces");
    return GridComplex();
  }
  std::vector<std::vector<std::size_t>> at(vertex_count);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (auto v : faces[f].roles) {
      if (v >= vertex_count) throw InvalidComplexError("face references an unknown vertex");
      at[v].push_back(f);
    }
  std::vector<std::optional<GridVertex>> pos(vertex_count);
  std::vector<bool> placed(faces.size(), false);
  std::deque<std::size_t> queue;
  auto place = [&](std::size_t f, GridVertex anchor) {
    placed[f] = true;
    auto off = role_offsets(faces[f].orientation);
    for (int r = 0; r < 3; ++r) {
      auto v = faces[f].roles[r];
      GridVertex p = anchor + off[r];
      if (pos[v] && *pos[v] != p)
        throw InvalidComplexError(fmt::format("inconsistent image for vertex {}", v));
      pos[v] = p;
    }
    queue.push_back(f);
  };
  place(0, first_anchor);
  while (!queue.empty()) {
    auto f = queue.front();
    queue.pop_front();
    for (auto v : faces[f].roles)
      for (auto g : at[v]) {
        if (placed[g]) {
          // Consistency of already placed faces is checked when they were placed.
          continue;
        }
        const auto& og = faces[g];
        auto off = role_offsets(og.orientation);
        int r = static_cast<int>(std::find(og.roles.begin(), og.roles.end(), v) - og.roles.begin());
        place(g, *pos[v] - off[r]);
      }
  }
  std::vector<GridVertex> images(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!pos[v]) throw InvalidComplexError(fmt::format("vertex {} is not reachable", v));
    images[v] = *pos[v];
  }
  std::vector<std::array<VertexId, 3>> raw;
  raw.reserve(faces.size());
  for (const auto& f : faces) raw.push_back(f.roles);
  return GridComplex(std::move(images), std::move(raw));
}

std::optional<EdgeId> GridComplex::find_edge(VertexId p, VertexId q) const {
  auto k = edge_key(p, q);
  auto it = std::lower_bound(edge_keys_.begin(), edge_keys_.end(), k);
  if (it == edge_keys_.end() || *it != k) return std::nullopt;
  return static_cast<EdgeId>(it - edge_keys_.begin());
}

std::optional<FaceId> GridComplex::across(EdgeId e, FaceId from) const {
  const auto& ed = edges_[e];
  if (ed.face_count != 2) return std::nullopt;
  return ed.faces[0] == from ? ed.faces[1] : ed.faces[0];
}

std::span<const FaceId> GridComplex::faces_at(VertexId v) const {
  return {vf_.data() + vf_offset_[v], vf_offset_[v + 1] - vf_offset_[v]};
}

std::span<const EdgeId> GridComplex::edges_at(VertexId v) const {
  return {ve_.data() + ve_offset_[v], ve_offset_[v + 1] - ve_offset_[v]};
}

std::vector<std::array<VertexId, 3>> GridComplex::raw_faces() const {
  std::vector<std::array<VertexId, 3>> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back(f.roles);
  return out;
}

std::vector<OrientedFace> GridComplex::oriented_faces() const {
  std::vector<OrientedFace> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back({f.image.orientation, f.roles});
  return out;
}

// ---------------------------------------------------------------------------
// Boundary walk

namespace {

VertexId third_vertex(const FaceRecord& f, VertexId p, VertexId q) {
  for (auto v : f.roles)
    if (v != p && v != q) return v;
  return p;
}

struct DirectedBoundary {
  VertexId tail = 0;
  VertexId head = 0;
  FaceId face = 0;
};

std::vector<DirectedBoundary> orient_boundary(const GridComplex& x) {
  std::vector<DirectedBoundary> dir(x.edge_count());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    const auto& ed = x.edge(e);
    if (!ed.boundary()) continue;
    FaceId f = ed.faces[0];
    VertexId w = third_vertex(x.face(f), ed.u, ed.v);
    GridVertex pu = x.image(ed.u), pv = x.image(ed.v), pw = x.image(w);
    if (cross(pv - pu, pw - pu) < 0)
      dir[e] = {ed.u, ed.v, f};
    else
      dir[e] = {ed.v, ed.u, f};
  }
  return dir;
}

// Rotates through the fan of faces at v, starting from face f which contains
// the edge {v, from}, until reaching a boundary edge.
EdgeId pivot_out(const GridComplex& x, FaceId f, VertexId v, VertexId from) {
  for (std::size_t guard = 0; guard <= x.face_count(); ++guard) {
    VertexId w = third_vertex(x.face(f), v, from);
    EdgeId e = *x.find_edge(v, w);
    if (x.edge(e).boundary()) return e;
    f = *x.across(e, f);
    from = w;
  }
  throw InvalidComplexError("vertex fan does not terminate");
}

}  // namespace

BoundaryLoop boundary_walk(const GridComplex& x) {
  BoundaryLoop loop;
  loop.index_of_edge.assign(x.edge_count(), kNoIndex);
  if (x.empty()) return loop;
  auto dir = orient_boundary(x);

  auto next = [&](EdgeId e) -> EdgeId {
    VertexId v = dir[e].head;
    std::vector<EdgeId> incoming;
    for (auto g : x.edges_at(v))
      if (x.edge(g).boundary() && dir[g].head == v) incoming.push_back(g);
    if (incoming.size() <= 1) return pivot_out(x, dir[e].face, v, dir[e].tail);
    auto key = [&](EdgeId g) {
      auto s = step_of(x.image(dir[g].tail) - x.image(v));
      return std::make_pair(static_cast<int>(*s), dir[g].face);
    };
    std::sort(incoming.begin(), incoming.end(), [&](EdgeId p, EdgeId q) { return key(p) < key(q); });
    auto j = static_cast<std::size_t>(std::find(incoming.begin(), incoming.end(), e) - incoming.begin());
    EdgeId chosen = incoming[(j + incoming.size() - 1) % incoming.size()];
    return pivot_out(x, dir[chosen].face, v, dir[chosen].tail);
  };

  EdgeId start = 0;
  while (!x.edge(start).boundary()) ++start;
  std::vector<EdgeId> order;
  EdgeId e = start;
  do {
    order.push_back(e);
    if (order.size() > x.boundary_edge_count())
      throw InvalidComplexError("boundary walk does not close");
    e = next(e);
  } while (e != start);
  if (order.size() != x.boundary_edge_count())
    throw InvalidComplexError(fmt::format("boundary walk visits {} of {} boundary edges", order.size(),
                                          x.boundary_edge_count()));

  std::size_t best = 0;
  auto rank = [&](std::size_t i) {
    const auto& d = dir[order[i]];
    return std::make_pair(x.image(d.tail), x.edge(order[i]).label);
  };
  for (std::size_t i = 1; i < order.size(); ++i)
    if (rank(i) < rank(best)) best = i;
  std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best), order.end());

  loop.panes.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& d = dir[order[i]];
    loop.panes.push_back(
        {d.tail, d.head, order[i], d.face, x.edge(order[i]).label, x.image(d.head) - x.image(d.tail)});
    loop.index_of_edge[order[i]] = i;
  }
  return loop;
}

std::vector<Step> BoundaryLoop::steps() const {
  std::vector<Step> out;
  out.reserve(panes.size());
  for (const auto& p : panes) out.push_back(*step_of(p.vector));
  return out;
}

std::string boundary_word(const BoundaryLoop& loop) {
  std::string out;
  for (auto s : loop.steps()) out += step_token(s);
  return out;
}

std::string canonical_boundary_word(const GridComplex& x) {
  auto steps = boundary_walk(x).steps();
  if (steps.empty()) return {};
  auto best = steps;
  for (std::size_t r = 1; r < steps.size(); ++r) {
    std::rotate(steps.begin(), steps.begin() + 1, steps.end());
    if (steps < best) best = steps;
  }
  std::string out;
  for (auto s : best) out += step_token(s);
  return out;
}

// ---------------------------------------------------------------------------
// Components

std::vector<std::size_t> face_components(const GridComplex& x, std::size_t* count) {
  DisjointSets ds(x.face_count());
  for (const auto& e : x.edges())
    if (e.face_count == 2) ds.unite(e.faces[0], e.faces[1]);
  std::vector<std::size_t> id(x.face_count(), kNoIndex);
  std::map<std::size_t, std::size_t> root_id;
  for (FaceId f = 0; f < x.face_count(); ++f) {
    auto [it, fresh] = root_id.emplace(ds.find(f), root_id.size());
    id[f] = it->second;
  }
  if (count) *count = root_id.size();
  return id;
}

std::size_t component_count(const GridComplex& x) {
  std::size_t n = 0;
  face_components(x, &n);
  return n;
}

ComponentDecomposition decompose_components(const GridComplex& x) {
  ComponentDecomposition out;
  std::size_t n = 0;
  auto id = face_components(x, &n);
  out.faces.assign(n, {});
  for (FaceId f = 0; f < x.face_count(); ++f) out.faces[id[f]].push_back(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::map<VertexId, VertexId> remap;
    std::vector<GridVertex> images;
    std::vector<std::array<VertexId, 3>> faces;
    for (auto f : out.faces[c]) {
      std::array<VertexId, 3> t{};
      for (int r = 0; r < 3; ++r) {
        VertexId v = x.face(f).roles[r];
        auto [it, fresh] = remap.emplace(v, static_cast<VertexId>(images.size()));
        if (fresh) images.push_back(x.image(v));
        t[r] = it->second;
      }
      faces.push_back(t);
    }
    out.components.emplace_back(std::move(images), std::move(faces));
  }
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    std::set<std::size_t> comps;
    for (auto f : x.faces_at(v)) comps.insert(id[f]);
    if (comps.size() < 2) continue;
    out.wedge_vertices.push_back(v);
    auto first = *comps.begin();
    for (auto c : comps)
      if (c != first) out.tree_edges.emplace_back(first, c);
  }
  return out;
}

bool is_primitive(const GridComplex& x) {
  for (const auto& e : x.edges())
    if (!e.boundary() && x.is_boundary_vertex(e.u) && x.is_boundary_vertex(e.v)) return false;
  return true;
}

GridComplex wedge_at_vertex(const GridComplex& x, VertexId at_x, const GridComplex& y, VertexId at_y) {
  if (at_x >= x.vertex_count() || !x.is_boundary_vertex(at_x))
    throw InvalidComplexError(fmt::format("vertex {} is not a boundary vertex of the first complex", at_x));
  if (at_y >= y.vertex_count() || !y.is_boundary_vertex(at_y))
    throw InvalidComplexError(fmt::format("vertex {} is not a boundary vertex of the second complex", at_y));
  std::vector<GridVertex> images = x.images();
  GridVertex shift = x.image(at_x) - y.image(at_y);
  std::vector<VertexId> remap(y.vertex_count());
  for (VertexId w = 0; w < y.vertex_count(); ++w) {
    if (w == at_y) {
      remap[w] = at_x;
    } else {
      remap[w] = static_cast<VertexId>(images.size());
      images.push_back(y.image(w) + shift);
    }
  }
  auto faces = x.raw_faces();
  for (const auto& f : y.faces()) faces.push_back({remap[f.roles[0]], remap[f.roles[1]], remap[f.roles[2]]});
  return GridComplex(std::move(images), std::move(faces));
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

std::string labelled_form(const GridComplex& x, const Pane& start) {
  const std::size_t nv = x.vertex_count();
  std::vector<std::size_t> label(nv, kNoIndex);
  std::vector<VertexId> order;
  std::vector<bool> seen(x.face_count(), false);
  std::deque<FaceId> queue;
  auto name = [&](VertexId v) {
    if (label[v] == kNoIndex) {
      label[v] = order.size();
      order.push_back(v);
    }
  };
  auto push = [&](FaceId f) {
    if (seen[f]) return;
    seen[f] = true;
    for (auto v : x.face(f).roles) name(v);
    queue.push_back(f);
  };
  name(start.tail);
  name(start.head);
  push(start.face);
  std::size_t visited = 0;
  while (visited < x.face_count()) {
    while (!queue.empty()) {
      FaceId f = queue.front();
      queue.pop_front();
      ++visited;
      for (int l = 1; l <= 3; ++l) {
        auto g = x.across(x.face_edge(f, PaneLabel(l)), f);
        if (g) push(*g);
      }
    }
    if (visited == x.face_count()) break;
    // Jump through a wedge vertex: first labelled vertex with an unseen face,
    // choosing the face by its image relative to that vertex.
    for (auto v : order) {
      std::optional<FaceId> pick;
      std::tuple<int, int, int> best{};
      for (auto f : x.faces_at(v)) {
        if (seen[f]) continue;
        auto rel = x.face(f).image.anchor() - x.image(v);
        std::tuple<int, int, int> key{rel.a, rel.b, static_cast<int>(x.face(f).image.orientation)};
        if (!pick || key < best) {
          pick = f;
          best = key;
        }
      }
      if (pick) {
        push(*pick);
        break;
      }
    }
  }
  GridVertex origin = x.image(order[0]);
  std::string out;
  for (auto v : order) {
    auto p = x.image(v) - origin;
    out += fmt::format("{},{};", p.a, p.b);
  }
  std::vector<std::array<std::size_t, 3>> fs;
  for (const auto& f : x.faces()) fs.push_back({label[f.roles[0]], label[f.roles[1]], label[f.roles[2]]});
  std::sort(fs.begin(), fs.end());
  out += '|';
  for (const auto& f : fs) out += fmt::format("{} {} {};", f[0], f[1], f[2]);
  return out;
}

}  // namespace

std::string canonical_form(const GridComplex& x) {
  if (x.empty()) return "empty";
  auto loop = boundary_walk(x);
  std::string best;
  for (const auto& p : loop.panes) {
    auto s = labelled_form(x, p);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

bool isomorphic(const GridComplex& x, const GridComplex& y) {
  if (x.vertex_count() != y.vertex_count() || x.face_count() != y.face_count() ||
      x.boundary_edge_count() != y.boundary_edge_count())
    return false;
  return canonical_form(x) == canonical_form(y);
}

}  // namespace tribilliards
