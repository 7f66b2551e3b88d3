#include "tribilliards/census.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "tribilliards/io.hpp"
#include "tribilliards/strips.hpp"

namespace tribilliards {

namespace {

using Cell = std::array<int, 2>;

int floor_div3(int v) { return v >= 0 ? v / 3 : -((-v + 2) / 3); }

Polyiamond normalized(Polyiamond p) {
  int ma = p.front()[0], mb = p.front()[1];
  for (const auto& c : p) {
    ma = std::min(ma, c[0]);
    mb = std::min(mb, c[1]);
  }
  ma = 3 * floor_div3(ma);
  mb = 3 * floor_div3(mb);
  for (auto& c : p) c = {c[0] - ma, c[1] - mb};
  std::sort(p.begin(), p.end());
  return p;
}

std::array<Cell, 3> neighbors(Cell c) {
  if (c[0] % 3 == 1 || c[0] % 3 == -2) {  // up: (3a+1, 3b+1)
    return {Cell{c[0] + 1, c[1] + 1}, Cell{c[0] - 2, c[1] + 1}, Cell{c[0] + 1, c[1] - 2}};
  }
  return {Cell{c[0] - 1, c[1] - 1}, Cell{c[0] + 2, c[1] - 1}, Cell{c[0] - 1, c[1] + 2}};
}

std::vector<std::size_t> min_rotations(const std::vector<Step>& steps) {
  std::vector<std::size_t> best{0};
  auto rotated_less = [&](std::size_t r, std::size_t s) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      auto x = steps[(r + k) % steps.size()], y = steps[(s + k) % steps.size()];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  };
  for (std::size_t r = 1; r < steps.size(); ++r) {
    int c = rotated_less(r, best.front());
    if (c < 0) best = {r};
    else if (c == 0) best.push_back(r);
  }
  return best;
}

std::string word_of(const std::vector<Step>& steps, std::size_t start) {
  std::string out;
  for (std::size_t k = 0; k < steps.size(); ++k) out += step_token(steps[(start + k) % steps.size()]);
  return out;
}

bool is_unit_hexagon(const GridComplex& x) {
  if (x.area() != 6) return false;
  for (VertexId v = 0; v < x.vertex_count(); ++v)
    if (!x.is_boundary_vertex(v) && x.faces_at(v).size() == 6) return true;
  return false;
}

}  // namespace

Polyiamond to_polyiamond(const std::vector<GridTriangle>& triangles) {
  Polyiamond p;
  for (const auto& t : triangles) {
    int d = t.orientation == Orientation::Up ? 1 : 2;
    p.push_back({3 * t.a + d, 3 * t.b + d});
  }
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<GridTriangle> to_triangles(const Polyiamond& p) {
  std::vector<GridTriangle> out;
  for (const auto& c : p) {
    int r = ((c[0] % 3) + 3) % 3;
    out.push_back({floor_div3(c[0]), floor_div3(c[1]), r == 1 ? Orientation::Up : Orientation::Down});
  }
  return out;
}

Polyiamond canonical_polyiamond(const Polyiamond& p) {
  if (p.empty()) return p;
  Polyiamond best;
  Polyiamond cur = p;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int rot = 0; rot < 6; ++rot) {
      auto n = normalized(cur);
      if (best.empty() || n < best) best = std::move(n);
      for (auto& c : cur) c = {-c[1], c[0] + c[1]};
    }
    for (auto& c : cur) c = {c[0] + c[1], -c[1]};
  }
  return best;
}

std::vector<Polyiamond> enumerate_polyiamond_shapes(std::size_t max_area) {
  std::vector<Polyiamond> out;
  if (max_area == 0) return out;
  std::set<Polyiamond> level{canonical_polyiamond({{1, 1}})};
  for (std::size_t n = 1;; ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n == max_area) break;
    std::set<Polyiamond> next;
    for (const auto& p : level) {
      std::set<Cell> have(p.begin(), p.end());
      for (const auto& c : p)
        for (const auto& nb : neighbors(c)) {
          if (have.count(nb)) continue;
          Polyiamond q = p;
          q.push_back(nb);
          next.insert(canonical_polyiamond(q));
        }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<GridComplex> enumerate_polyiamonds(std::size_t max_area) {
  std::vector<GridComplex> out;
  for (const auto& p : enumerate_polyiamond_shapes(max_area)) {
    try {
      out.push_back(GridComplex::from_triangles(to_triangles(p)));
    } catch (const InvalidComplexError&) {
      // holes, including those pinched at a single vertex
    }
  }
  return out;
}

std::vector<GridComplex> enumerate_strip_tree_complexes(std::size_t max_faces) {
  std::map<std::string, GridComplex> all;
  std::vector<StripTreeSpec> frontier;
  auto consider = [&](const StripTreeSpec& spec, std::vector<StripTreeSpec>& next) {
    try {
      auto x = build_from_strip_tree(spec);
      auto key = canonical_form(x);
      if (all.emplace(key, x).second) next.push_back(to_spec(strip_tree(x)));
    } catch (const InvalidComplexError&) {
    } catch (const StripSpecError&) {
    }
  };
  for (std::size_t len = 1; len <= max_faces; ++len)
    for (auto o : {Orientation::Up, Orientation::Down}) consider({{{len, o}}, {}, {}}, frontier);

  while (!frontier.empty()) {
    std::vector<StripTreeSpec> next;
    for (const auto& spec : frontier) {
      std::size_t area = 0;
      for (const auto& s : spec.strips) area += s.length;
      const std::size_t m = spec.strips.size();
      std::set<std::pair<std::size_t, std::size_t>> used_top, used_bottom;
      for (const auto& g : spec.glues)
        for (std::size_t k = 0; k < g.length; ++k) {
          used_top.emplace(g.lower, g.lower_offset + k);
          used_bottom.emplace(g.upper, g.upper_offset + k);
        }
      for (std::size_t len = 1; area + len <= max_faces; ++len)
        for (auto o : {Orientation::Up, Orientation::Down}) {
          StripShape shape{len, o};
          for (std::size_t s = 0; s < m; ++s) {
            // New strip on top of s, then below it.
            for (int side = 0; side < 2; ++side) {
              bool above = side == 0;
              std::size_t old_edges = above ? spec.strips[s].downs() : spec.strips[s].ups();
              std::size_t new_edges = above ? shape.ups() : shape.downs();
              const auto& used = above ? used_top : used_bottom;
              for (std::size_t a = 0; a < old_edges; ++a)
                for (std::size_t r = 1; a + r <= old_edges && r <= new_edges; ++r) {
                  if (used.count({s, a + r - 1})) break;
                  for (std::size_t b = 0; b + r <= new_edges; ++b) {
                    StripTreeSpec grown = spec;
                    grown.strips.push_back(shape);
                    if (above) grown.glues.push_back({s, m, a, b, r});
                    else grown.glues.push_back({m, s, b, a, r});
                    consider(grown, next);
                  }
                }
            }
          }
        }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [key, x] : all) order.emplace_back(x.area(), key);
  std::sort(order.begin(), order.end());
  std::vector<GridComplex> out;
  out.reserve(order.size());
  for (const auto& [area, key] : order) out.push_back(all.at(key));
  return out;
}

bool is_hexagon_tree(const GridComplex& x) {
  if (x.empty()) return false;
  std::vector<std::size_t> piece(x.face_count());
  std::iota(piece.begin(), piece.end(), 0);
  auto find = [&](std::size_t f) {
    while (piece[f] != f) f = piece[f] = piece[piece[f]];
    return f;
  };
  std::vector<EdgeId> cuts;
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    const auto& ed = x.edge(e);
    if (ed.boundary()) continue;
    if (x.is_boundary_vertex(ed.u) && x.is_boundary_vertex(ed.v)) {
      cuts.push_back(e);
    } else {
      auto a = find(ed.faces[0]), b = find(ed.faces[1]);
      if (a != b) piece[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<FaceId>> pieces;
  for (FaceId f = 0; f < x.face_count(); ++f) pieces[find(f)].push_back(f);
  for (const auto& [root, faces] : pieces) {
    if (faces.size() != 6) return false;
    bool centred = false;
    for (auto v : x.face(faces.front()).roles) {
      if (x.is_boundary_vertex(v)) continue;
      centred |= std::all_of(faces.begin(), faces.end(), [&](FaceId f) {
        const auto& r = x.face(f).roles;
        return std::find(r.begin(), r.end(), v) != r.end();
      });
    }
    if (!centred) return false;
  }
  if (cuts.size() + 1 != pieces.size()) return false;
  std::map<std::size_t, std::size_t> graph;
  for (const auto& [root, faces] : pieces) graph[root] = root;
  auto gfind = [&](std::size_t p) {
    while (graph[p] != p) p = graph[p];
    return p;
  };
  for (auto e : cuts) {
    auto a = gfind(find(x.edge(e).faces[0])), b = gfind(find(x.edge(e).faces[1]));
    if (a == b) return false;
    graph[std::max(a, b)] = std::min(a, b);
  }
  return true;
}

std::string_view bound_name(BoundKind b) {
  switch (b) {
    case BoundKind::Perimeter: return "perim";
    case BoundKind::Area: return "area";
    case BoundKind::Both: return "both";
  }
  return "?";
}

std::string VerificationReport::header() const {
  return fmt::format("verify max_area={} bound={} corpus={} perim_equalities={} area_equalities={} "
                     "hexagon_trees={} violations={}",
                     max_area, bound_name(bound), corpus_size, perimeter_equalities, area_equalities,
                     hexagon_trees, violations.size());
}

std::string VerificationReport::render() const {
  std::string out = header() + "\n";
  for (const auto& v : violations) out += "violation " + v + "\n";
  for (const auto& e : equality_cases)
    out += fmt::format("{} perim={} area={} cyc={} cycles={}\n", e.word, e.perim, e.area, e.cyc,
                       cycle_type_string(e.cycle_type));
  return out;
}

namespace {

struct Checked {
  std::vector<std::string> violations;
  std::optional<EqualityCase> equality;
  bool primitive_perimeter_equality = false;
  bool hexagon_tree = false;
};

Checked check_one(const GridComplex& x, BoundKind which) {
  Checked r;
  auto perm = billiards_permutation(x);
  const std::size_t p = perimeter(x), a = x.area(), c = perm.cyc(), comps = component_count(x);
  const bool perim_mode = which != BoundKind::Area, area_mode = which != BoundKind::Perimeter;
  auto word = canonical_boundary_word(x);
  auto type = perm.cycle_type();
  EqualityCase e{word, p, a, c, type, 4 * c == p + 2 * comps, 6 * c == a + 6 * comps};
  if (perim_mode) {
    if (4 * c > p + 2 * comps) r.violations.push_back(fmt::format("perimeter {} cyc={} perim={}", word, c, p));
    if (7 * c > 2 * p + 3) r.violations.push_back(fmt::format("superseded {} cyc={} perim={}", word, c, p));
    if (e.perimeter_equality && is_primitive(x)) {
      r.primitive_perimeter_equality = true;
      bool shape = type.size() >= 2 && type[0] == 3 && type[1] == 3 &&
                   std::all_of(type.begin() + 2, type.end(), [](std::size_t l) { return l == 4; });
      if (!shape)
        r.violations.push_back(fmt::format("equality-type {} cycles={}", word, cycle_type_string(type)));
    }
  }
  if (area_mode) {
    if (6 * c > a + 6 * comps) r.violations.push_back(fmt::format("area {} cyc={} area={}", word, c, a));
    r.hexagon_tree = is_hexagon_tree(x);
    if (e.area_equality != r.hexagon_tree)
      r.violations.push_back(fmt::format("area-equality {} equality={} hexagon_tree={}", word,
                                         e.area_equality, r.hexagon_tree));
  }
  if ((perim_mode && e.perimeter_equality) || (area_mode && e.area_equality)) r.equality = std::move(e);
  return r;
}

}  // namespace

VerificationReport verify_corpus(const std::vector<GridComplex>& corpus, BoundKind which, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Checked> results(corpus.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1))));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < corpus.size(); i += jobs) results[i] = check_one(corpus[i], which);
      });
  }
  VerificationReport rep;
  rep.bound = which;
  rep.corpus_size = corpus.size();
  for (const auto& x : corpus) rep.max_area = std::max(rep.max_area, x.area());
  for (auto& r : results) {
    for (auto& v : r.violations) rep.violations.push_back(std::move(v));
    rep.primitive_perimeter_equalities += r.primitive_perimeter_equality;
    rep.hexagon_trees += r.hexagon_tree;
    if (r.equality) {
      rep.perimeter_equalities += r.equality->perimeter_equality && which != BoundKind::Area;
      rep.area_equalities += r.equality->area_equality && which != BoundKind::Perimeter;
      rep.equality_cases.push_back(std::move(*r.equality));
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport verify_bounds(std::size_t max_area, BoundKind which, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = verify_corpus(enumerate_polyiamonds(max_area), which, jobs);
  rep.max_area = max_area;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string Perim6Census::render() const {
  std::string out = fmt::format(
      "perim6 loops={} periodic={} max_faces={} searched={} realizations={} same_orientation={} "
      "only_three_cycles={} exceptions={}\n",
      loops.size(), periodic_loops, max_faces, complexes_searched, realizations, same_orientation,
      only_three_cycles, only_three_exceptions.size());
  for (const auto& l : loops) out += "loop " + l + "\n";
  for (const auto& e : only_three_exceptions) out += "exception " + e + "\n";
  return out;
}

Perim6Census census_perim6_loops(std::size_t max_faces) {
  Perim6Census census;
  census.max_faces = max_faces;
  std::vector<Step> letters{Step::NE, Step::NE, Step::W, Step::W, Step::SE, Step::SE};
  std::sort(letters.begin(), letters.end());
  std::set<std::string> loops;
  do {
    auto rot = min_rotations(letters);
    auto w = word_of(letters, rot.front());
    if (loops.insert(w).second && rot.size() > 1) ++census.periodic_loops;
  } while (std::next_permutation(letters.begin(), letters.end()));
  census.loops.assign(loops.begin(), loops.end());

  auto searched = enumerate_strip_tree_complexes(max_faces);
  std::set<std::string> seen;
  for (const auto& x : searched) seen.insert(canonical_form(x));
  for (const auto& w : census.loops) {
    try {
      auto x = complex_from_word(w);
      if (seen.insert(canonical_form(x)).second) searched.push_back(x);
    } catch (const std::exception&) {
      // not the boundary of a simple polygon
    }
  }
  census.complexes_searched = searched.size();

  for (const auto& x : searched) {
    auto loop = boundary_walk(x);
    auto perm = billiards_permutation(x, loop);
    auto type = perm.cycle_type();
    bool only_three = std::all_of(type.begin(), type.end(), [](std::size_t l) { return l == 3; });
    if (only_three) {
      ++census.only_three_cycles;
      if (x.area() != 1 && !is_unit_hexagon(x)) census.only_three_exceptions.push_back(canonical_boundary_word(x));
    }
    if (perimeter(x) != 6) continue;
    if (loops.count(canonical_boundary_word(x))) ++census.realizations;
    if (type == std::vector<std::size_t>{3, 3} &&
        cycle_orientation(x, loop, perm.cycles[0]) == cycle_orientation(x, loop, perm.cycles[1]))
      ++census.same_orientation;
  }
  return census;
}

std::vector<std::size_t> aligned_permutation(const GridComplex& x) {
  auto loop = boundary_walk(x);
  auto perm = billiards_permutation(x, loop);
  const std::size_t n = loop.size();
  std::vector<std::size_t> best;
  for (auto r : min_rotations(loop.steps())) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = (perm.map[(i + r) % n] + n - r) % n;
    if (best.empty() || m < best) best = std::move(m);
  }
  return best;
}

std::vector<std::pair<GridComplex, GridComplex>> search_boundary_ambiguous(std::size_t max_faces) {
  std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>> groups;
  auto all = enumerate_strip_tree_complexes(max_faces);
  for (std::size_t i = 0; i < all.size(); ++i)
    groups[canonical_boundary_word(all[i])].emplace(aligned_permutation(all[i]), i);
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& [word, reps] : groups) {
    if (reps.size() < 2) continue;
    std::vector<std::size_t> members;
    for (const auto& [key, i] : reps) members.push_back(i);
    std::sort(members.begin(), members.end());
    for (std::size_t k = 1; k < members.size(); ++k) idx.emplace_back(members[0], members[k]);
  }
  std::sort(idx.begin(), idx.end());
  std::vector<std::pair<GridComplex, GridComplex>> out;
  for (auto [a, b] : idx) out.emplace_back(all[a], all[b]);
  return out;
}

}  // namespace tribilliards
