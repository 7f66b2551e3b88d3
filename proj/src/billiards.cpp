#include "tribilliards/billiards.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace tribilliards {

namespace {

GridVertex doubled_midpoint(const GridComplex& x, const Pane& p) { return x.image(p.tail) + x.image(p.head); }

}  // namespace

std::vector<std::size_t> BilliardsPermutation::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles) t.push_back(c.size());
  std::sort(t.begin(), t.end());
  return t;
}

std::size_t BilliardsPermutation::cycle_of(std::size_t i) const {
  for (std::size_t c = 0; c < cycles.size(); ++c)
    if (std::find(cycles[c].begin(), cycles[c].end(), i) != cycles[c].end()) return c;
  return kNoIndex;
}

BeamSegment trace_beam(const GridComplex& x, const BoundaryLoop& loop, std::size_t start) {
  const Pane& src = loop[start];
  BeamSegment seg;
  seg.source = start;
  FaceId face = src.face;
  PaneLabel entering = src.label;
  std::vector<bool> seen(3 * x.face_count(), false);
  while (true) {
    std::size_t state = 3 * face + static_cast<std::size_t>(entering.value() - 1);
    if (seen[state]) throw ClosedOrbitError("invalid complex: closed orbit");
    seen[state] = true;
    seg.crossed.push_back(face);
    PaneLabel out = exit_label(entering, x.face(face).image.orientation);
    EdgeId e = x.face_edge(face, out);
    if (x.edge(e).boundary()) {
      seg.target = loop.index_of_edge[e];
      break;
    }
    face = *x.across(e, face);
    entering = out;
  }
  auto dir = classify_direction(doubled_midpoint(x, loop[seg.target]) - doubled_midpoint(x, src));
  if (!dir) throw InvalidComplexError("beam segment has no admissible direction");
  seg.direction = *dir;
  return seg;
}

BeamSegment trace_beam(const GridComplex& x, std::size_t start) {
  return trace_beam(x, boundary_walk(x), start);
}

std::size_t trace_reverse(const GridComplex& x, const BoundaryLoop& loop, std::size_t target) {
  FaceId face = loop[target].face;
  PaneLabel entering = loop[target].label;
  for (std::size_t guard = 0; guard <= 3 * x.face_count(); ++guard) {
    PaneLabel out = reverse_exit_label(entering, x.face(face).image.orientation);
    EdgeId e = x.face_edge(face, out);
    if (x.edge(e).boundary()) return loop.index_of_edge[e];
    face = *x.across(e, face);
    entering = out;
  }
  throw ClosedOrbitError("invalid complex: closed orbit");
}

BilliardsPermutation billiards_permutation(const GridComplex& x, const BoundaryLoop& loop) {
  BilliardsPermutation perm;
  perm.n = loop.size();
  perm.map.resize(perm.n);
  perm.segments.reserve(perm.n);
  for (std::size_t i = 0; i < perm.n; ++i) {
    perm.segments.push_back(trace_beam(x, loop, i));
    perm.map[i] = perm.segments.back().target;
  }
  std::vector<bool> done(perm.n, false);
  for (std::size_t i = 0; i < perm.n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !done[j]; j = perm.map[j]) {
      done[j] = true;
      cycle.push_back(j);
    }
    perm.cycles.push_back(std::move(cycle));
  }
  return perm;
}

BilliardsPermutation billiards_permutation(const GridComplex& x) {
  return billiards_permutation(x, boundary_walk(x));
}

std::vector<std::vector<std::size_t>> beam_incidence_table(const GridComplex& x,
                                                           const BilliardsPermutation& perm) {
  std::vector<std::vector<std::size_t>> table(x.face_count());
  for (std::size_t s = 0; s < perm.segments.size(); ++s)
    for (auto f : perm.segments[s].crossed) table[f].push_back(s);
  return table;
}

int cycle_orientation(const GridComplex& x, const BoundaryLoop& loop, const std::vector<std::size_t>& cycle) {
  long long twice = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    GridVertex p = doubled_midpoint(x, loop[cycle[k]]);
    GridVertex q = doubled_midpoint(x, loop[cycle[(k + 1) % cycle.size()]]);
    twice += cross(p, q);
  }
  return (twice > 0) - (twice < 0);
}

std::string cycle_type_string(const std::vector<std::size_t>& type) {
  std::string out = "{";
  for (std::size_t i = 0; i < type.size(); ++i) out += fmt::format("{}{}", i ? "," : "", type[i]);
  return out + "}";
}

std::string permutation_report(const GridComplex& x, const BilliardsPermutation& perm) {
  std::string out = fmt::format("perim={} area={} comps={} cyc={}\n", perm.n, x.area(), component_count(x),
                                perm.cyc());
  for (const auto& c : perm.cycles) {
    out += "(";
    for (auto i : c) out += fmt::format(" {}", i + 1);
    out += " )\n";
  }
  return out;
}

}  // namespace tribilliards
