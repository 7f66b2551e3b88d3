#include "tribilliards/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "tribilliards/strips.hpp"

namespace tribilliards {

namespace {

struct Classes {
  std::vector<VertexId> parent;
  explicit Classes(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexId{0}); }
  VertexId find(VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<VertexId> collapsed_row(Classes& cls, const std::vector<VertexId>& row) {
  std::vector<VertexId> out;
  for (auto v : row) {
    auto c = cls.find(v);
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

bool same_cycle(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  std::size_t shift = static_cast<std::size_t>(it - b.begin());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[(k + shift) % b.size()]) return false;
  return true;
}

}  // namespace

DropOutcome drop_cycle(const GridComplex& x, const BoundaryLoop& loop, const BilliardsPermutation& perm,
                       const std::vector<std::size_t>& cycle) {
  if (std::none_of(perm.cycles.begin(), perm.cycles.end(),
                   [&](const auto& c) { return same_cycle(cycle, c); }))
    throw std::invalid_argument("not a cycle of the billiards permutation");

  std::vector<bool> marked(x.face_count(), false);
  Classes cls(x.vertex_count());
  std::vector<bool> degenerate_face(x.face_count(), false);
  for (auto i : cycle) {
    const auto& seg = perm.segments[i];
    if (seg.direction == BeamDirection::Deg60) {
      for (auto f : seg.crossed) {
        marked[f] = true;
        const auto& e = x.edge(x.face_edge(f, PaneLabel(1)));
        cls.unite(e.u, e.v);
      }
    } else if (seg.direction == BeamDirection::Deg180) {
      for (auto f : seg.crossed) {
        marked[f] = true;
        degenerate_face[f] = true;
      }
    }
  }

  auto strips = strip_decomposition(x);
  std::vector<const Strip*> degenerate;
  for (const auto& s : strips)
    if (degenerate_face[s.faces.front()]) degenerate.push_back(&s);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto* s : degenerate) {
      auto bottom = collapsed_row(cls, s->bottom_row);
      auto top = collapsed_row(cls, s->top_row);
      if (bottom.size() != top.size())
        throw SurgeryError(fmt::format("collapsed strip rows differ in length ({} vs {})", bottom.size(),
                                       top.size()));
      for (std::size_t k = 0; k < bottom.size(); ++k) changed |= cls.unite(bottom[k], top[k]);
    }
  }

  DropOutcome out;
  std::map<VertexId, VertexId> dense;
  std::vector<OrientedFace> faces;
  std::optional<GridVertex> anchor;
  for (FaceId f = 0; f < x.face_count(); ++f) {
    if (marked[f]) {
      ++out.removed_faces;
      continue;
    }
    const auto& rec = x.face(f);
    OrientedFace of{rec.image.orientation, {}};
    for (int r = 0; r < 3; ++r) {
      auto c = cls.find(rec.roles[r]);
      of.roles[r] = dense.emplace(c, static_cast<VertexId>(dense.size())).first->second;
    }
    if (of.roles[0] == of.roles[1] || of.roles[1] == of.roles[2] || of.roles[0] == of.roles[2])
      throw SurgeryError(fmt::format("surviving face {} collapsed", f));
    if (!anchor) anchor = rec.image.anchor();
    faces.push_back(of);
  }
  try {
    out.result = GridComplex::realize(dense.size(), faces, anchor.value_or(GridVertex{}));
  } catch (const InvalidComplexError& e) {
    throw SurgeryError(fmt::format("rebuilt complex is invalid: {}", e.what()));
  }

  auto new_loop = boundary_walk(out.result);
  std::map<std::pair<VertexId, VertexId>, std::size_t> by_ends;
  for (std::size_t j = 0; j < new_loop.size(); ++j) by_ends[{new_loop[j].tail, new_loop[j].head}] = j;
  std::set<std::size_t> dropped(cycle.begin(), cycle.end());
  out.relabel.assign(loop.size(), kNoIndex);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (dropped.count(i)) continue;
    auto t = dense.find(cls.find(loop[i].tail));
    auto h = dense.find(cls.find(loop[i].head));
    if (t == dense.end() || h == dense.end()) throw SurgeryError(fmt::format("pane {} lost its face", i));
    auto it = by_ends.find({t->second, h->second});
    if (it == by_ends.end()) throw SurgeryError(fmt::format("pane {} is no longer on the boundary", i));
    out.relabel[i] = it->second;
  }
  return out;
}

DropOutcome drop_cycle(const GridComplex& x, const std::vector<std::size_t>& cycle) {
  auto loop = boundary_walk(x);
  auto perm = billiards_permutation(x, loop);
  return drop_cycle(x, loop, perm, cycle);
}

DropOutcome drop_cycle_at(const GridComplex& x, std::size_t index) {
  auto loop = boundary_walk(x);
  auto perm = billiards_permutation(x, loop);
  if (index >= perm.cycles.size())
    throw std::out_of_range(fmt::format("cycle {} does not exist (cyc={})", index + 1, perm.cycles.size()));
  return drop_cycle(x, loop, perm, perm.cycles[index]);
}

}  // namespace tribilliards
