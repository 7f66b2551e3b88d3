#include "tribilliards/strips.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "tribilliards/io.hpp"

namespace tribilliards {

namespace {

PaneLabel west_label(Orientation o) { return PaneLabel(o == Orientation::Up ? 2 : 3); }
PaneLabel east_label(Orientation o) { return PaneLabel(o == Orientation::Up ? 3 : 2); }

void push_unique(std::vector<VertexId>& row, VertexId v) {
  if (row.empty() || row.back() != v) row.push_back(v);
}

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

}  // namespace

std::vector<Strip> strip_decomposition(const GridComplex& x) {
  std::vector<bool> used(x.face_count(), false);
  std::vector<Strip> strips;
  for (FaceId f0 = 0; f0 < x.face_count(); ++f0) {
    if (used[f0]) continue;
    FaceId west = f0;
    for (std::size_t guard = 0; guard < x.face_count(); ++guard) {
      auto g = x.across(x.face_edge(west, west_label(x.face(west).image.orientation)), west);
      if (!g) break;
      west = *g;
    }
    Strip s;
    s.start = x.face(west).image.orientation;
    std::optional<FaceId> cur = west;
    while (cur) {
      FaceId f = *cur;
      used[f] = true;
      s.faces.push_back(f);
      const auto& rec = x.face(f);
      if (rec.image.orientation == Orientation::Up) {
        push_unique(s.bottom_row, rec.roles[0]);
        push_unique(s.bottom_row, rec.roles[1]);
        push_unique(s.top_row, rec.roles[2]);
        s.bottom_edges.push_back(x.face_edge(f, PaneLabel(1)));
      } else {
        push_unique(s.bottom_row, rec.roles[0]);
        push_unique(s.top_row, rec.roles[1]);
        push_unique(s.top_row, rec.roles[2]);
        s.top_edges.push_back(x.face_edge(f, PaneLabel(1)));
      }
      cur = x.across(x.face_edge(f, east_label(rec.image.orientation)), f);
      if (cur && used[*cur]) throw InvalidComplexError("horizontal strip closes on itself");
    }
    strips.push_back(std::move(s));
  }
  std::stable_sort(strips.begin(), strips.end(), [&](const Strip& p, const Strip& q) {
    return x.face(p.faces.front()).image < x.face(q.faces.front()).image;
  });
  return strips;
}

std::vector<std::size_t> strip_index(const std::vector<Strip>& strips, std::size_t face_count) {
  std::vector<std::size_t> idx(face_count, kNoIndex);
  for (std::size_t s = 0; s < strips.size(); ++s)
    for (auto f : strips[s].faces) idx[f] = s;
  return idx;
}

StripTree strip_tree(const GridComplex& x) {
  if (component_count(x) != 1) throw std::invalid_argument("strip tree needs an indecomposable complex");
  StripTree tree;
  tree.strips = strip_decomposition(x);
  auto idx = strip_index(tree.strips, x.face_count());
  std::map<EdgeId, std::size_t> bottom_pos;
  for (const auto& s : tree.strips)
    for (std::size_t k = 0; k < s.bottom_edges.size(); ++k) bottom_pos[s.bottom_edges[k]] = k;

  for (std::size_t i = 0; i < tree.strips.size(); ++i) {
    const auto& s = tree.strips[i];
    std::optional<StripGlue> run;
    auto flush = [&] {
      if (run) tree.glues.push_back(*run);
      run.reset();
    };
    for (std::size_t k = 0; k < s.top_edges.size(); ++k) {
      EdgeId e = s.top_edges[k];
      const auto& ed = x.edge(e);
      if (ed.boundary()) {
        flush();
        continue;
      }
      FaceId below = ed.faces[0], above = ed.faces[1];
      if (x.face(above).image.orientation != Orientation::Up) std::swap(below, above);
      std::size_t j = idx[above];
      std::size_t pj = bottom_pos.at(e);
      if (run && run->upper == j && run->upper_offset + run->length == pj) {
        ++run->length;
      } else {
        flush();
        run = StripGlue{i, j, k, pj, 1};
      }
    }
    flush();
  }

  Dsu ds(tree.strips.size());
  bool tree_ok = tree.glues.size() + 1 == tree.strips.size();
  for (const auto& g : tree.glues) tree_ok &= ds.unite(g.lower, g.upper);
  if (!tree_ok) throw InvalidComplexError("strip graph is not a tree");

  for (const auto& g : tree.glues) {
    const auto& row = tree.strips[g.lower].top_row;
    for (std::size_t k = 0; k <= g.length; ++k) {
      VertexId v = row[g.lower_offset + k];
      bool end = k == 0 || k == g.length;
      if (x.is_boundary_vertex(v) != end)
        throw InvalidComplexError(fmt::format("shared horizontal run has a misplaced vertex {}", v));
    }
  }
  return tree;
}

StripTreeSpec to_spec(const StripTree& tree) {
  StripTreeSpec spec;
  for (const auto& s : tree.strips) spec.strips.push_back({s.length(), s.start});
  spec.glues = tree.glues;
  return spec;
}

GridComplex build_from_strip_tree(const StripTreeSpec& spec) {
  const std::size_t m = spec.strips.size();
  if (m == 0) {
    if (!spec.glues.empty() || !spec.wedges.empty()) throw StripSpecError("records without strips");
    return GridComplex();
  }
  std::vector<std::size_t> bottom_base(m), top_base(m);
  std::size_t nv = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (spec.strips[i].length == 0) throw StripSpecError(fmt::format("strip {} is empty", i));
    bottom_base[i] = nv;
    nv += spec.strips[i].ups() + 1;
    top_base[i] = nv;
    nv += spec.strips[i].downs() + 1;
  }

  std::set<std::pair<std::size_t, std::size_t>> used_top, used_bottom;
  Dsu tree(m);
  std::size_t tree_edges = 0;
  Dsu verts(nv);
  for (const auto& g : spec.glues) {
    if (g.lower >= m || g.upper >= m) throw StripSpecError("glue references an unknown strip");
    if (g.lower == g.upper) throw StripSpecError("glue joins a strip to itself");
    if (g.length == 0) throw StripSpecError("glue run must be nonempty");
    if (g.lower_offset + g.length > spec.strips[g.lower].downs() ||
        g.upper_offset + g.length > spec.strips[g.upper].ups())
      throw StripSpecError("glue run leaves the strip");
    for (std::size_t k = 0; k < g.length; ++k) {
      if (!used_top.emplace(g.lower, g.lower_offset + k).second ||
          !used_bottom.emplace(g.upper, g.upper_offset + k).second)
        throw StripSpecError("horizontal edge appears in more than one glue");
    }
    for (std::size_t k = 0; k <= g.length; ++k)
      verts.unite(top_base[g.lower] + g.lower_offset + k, bottom_base[g.upper] + g.upper_offset + k);
    if (!tree.unite(g.lower, g.upper)) throw StripSpecError("strip graph has a cycle");
    ++tree_edges;
  }
  for (const auto& w : spec.wedges) {
    if (w.first >= m || w.second >= m) throw StripSpecError("wedge references an unknown strip");
    auto total = [&](std::size_t s) { return spec.strips[s].ups() + spec.strips[s].downs() + 2; };
    if (w.first_position >= total(w.first) || w.second_position >= total(w.second))
      throw StripSpecError("wedge vertex position out of range");
    verts.unite(bottom_base[w.first] + w.first_position, bottom_base[w.second] + w.second_position);
    if (!tree.unite(w.first, w.second)) throw StripSpecError("strip graph has a cycle");
    ++tree_edges;
  }
  if (tree_edges + 1 != m) throw StripSpecError("strip graph is not connected");

  std::map<std::size_t, VertexId> dense;
  auto vid = [&](std::size_t raw) {
    auto r = verts.find(raw);
    return dense.emplace(r, static_cast<VertexId>(dense.size())).first->second;
  };
  std::vector<OrientedFace> faces;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bi = 0, ti = 0;
    Orientation o = spec.strips[i].start;
    for (std::size_t k = 0; k < spec.strips[i].length; ++k, o = opposite(o)) {
      if (o == Orientation::Up) {
        faces.push_back({o, {vid(bottom_base[i] + bi), vid(bottom_base[i] + bi + 1), vid(top_base[i] + ti)}});
        ++bi;
      } else {
        faces.push_back({o, {vid(bottom_base[i] + bi), vid(top_base[i] + ti), vid(top_base[i] + ti + 1)}});
        ++ti;
      }
    }
  }
  return GridComplex::realize(dense.size(), faces, {0, 0});
}

std::string serialize_striptree(const StripTreeSpec& spec) {
  std::string out = "# striptree v1\n";
  for (std::size_t i = 0; i < spec.strips.size(); ++i)
    out += fmt::format("s {} {} {}\n", i, spec.strips[i].length, orientation_char(spec.strips[i].start));
  for (const auto& g : spec.glues)
    out += fmt::format("glue {} {} {} {} {}\n", g.lower, g.upper, g.lower_offset, g.upper_offset, g.length);
  for (const auto& w : spec.wedges)
    out += fmt::format("wedge {} {} {} {}\n", w.first, w.second, w.first_position, w.second_position);
  return out;
}

StripTreeSpec parse_striptree(std::string_view text) {
  StripTreeSpec spec;
  std::map<long long, std::size_t> ids;
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  auto number = [&](const std::string& t) -> long long {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty()) throw ParseError(n, fmt::format("expected an integer, got '{}'", t));
    return v;
  };
  auto strip = [&](const std::string& t) {
    auto it = ids.find(number(t));
    if (it == ids.end()) throw ParseError(n, fmt::format("unknown strip '{}'", t));
    return it->second;
  };
  auto count = [&](const std::string& t) {
    auto v = number(t);
    if (v < 0) throw ParseError(n, "negative value");
    return static_cast<std::size_t>(v);
  };
  for (std::string raw; std::getline(in, raw);) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "s" && tok.size() == 4) {
      if (tok[3] != "u" && tok[3] != "d") throw ParseError(n, "orientation must be 'u' or 'd'");
      if (!ids.emplace(number(tok[1]), spec.strips.size()).second) throw ParseError(n, "duplicate strip id");
      spec.strips.push_back({count(tok[2]), tok[3] == "u" ? Orientation::Up : Orientation::Down});
    } else if (tok[0] == "glue" && tok.size() == 6) {
      spec.glues.push_back({strip(tok[1]), strip(tok[2]), count(tok[3]), count(tok[4]), count(tok[5])});
    } else if (tok[0] == "wedge" && tok.size() == 5) {
      spec.wedges.push_back({strip(tok[1]), strip(tok[2]), count(tok[3]), count(tok[4])});
    } else {
      throw ParseError(n, fmt::format("malformed record '{}'", tok[0]));
    }
  }
  return spec;
}

}  // namespace tribilliards
