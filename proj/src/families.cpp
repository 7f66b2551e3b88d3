#include "tribilliards/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include <fmt/format.h>

namespace tribilliards {

namespace {

std::vector<GridTriangle> rhombus_triangles(int n) {
  std::vector<GridTriangle> t;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.push_back({a, b, Orientation::Up});
      t.push_back({a, b, Orientation::Down});
    }
  return t;
}

void remove(std::vector<GridTriangle>& ts, std::initializer_list<GridTriangle> gone) {
  std::erase_if(ts, [&](const GridTriangle& t) { return std::find(gone.begin(), gone.end(), t) != gone.end(); });
}

void require(bool ok, Family f, int k) {
  if (!ok) throw FamilyError(fmt::format("{}: k = {} is out of range", family_name(f), k));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Rhombus: return "rhombus";
    case Family::CutRhombus: return "cut_rhombus";
    case Family::Trunc4k1: return "trunc_4k1";
    case Family::Trunc4k3: return "trunc_4k3";
    case Family::HexagonTree: return "hexagon_tree";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto f : {Family::Rhombus, Family::CutRhombus, Family::Trunc4k1, Family::Trunc4k3, Family::HexagonTree})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

GridComplex make_family(const FamilySpec& spec) {
  const int k = spec.k;
  switch (spec.family) {
    case Family::Rhombus: {
      require(k >= 1, spec.family, k);
      return GridComplex::from_triangles(rhombus_triangles(k));
    }
    case Family::CutRhombus: {
      require(k >= 0, spec.family, k);
      int n = k + 2;
      auto ts = rhombus_triangles(n);
      remove(ts, {{0, 0, Orientation::Up}, {n - 1, n - 1, Orientation::Down}});
      return GridComplex::from_triangles(ts);
    }
    case Family::Trunc4k3: {
      require(k >= 0, spec.family, k);
      int n = k + 1;
      auto ts = rhombus_triangles(n);
      remove(ts, {{n - 1, n - 1, Orientation::Down}});
      return GridComplex::from_triangles(ts);
    }
    case Family::Trunc4k1: {
      require(k >= 1, spec.family, k);
      int n = k + 1;
      auto ts = rhombus_triangles(n);
      remove(ts, {{n - 1, n - 1, Orientation::Down},
                  {0, 0, Orientation::Up},
                  {1, 0, Orientation::Up},
                  {0, 1, Orientation::Up},
                  {0, 0, Orientation::Down}});
      return GridComplex::from_triangles(ts);
    }
    case Family::HexagonTree: {
      if (!spec.parents.empty()) return hexagon_tree(spec.parents);
      require(k >= 1, spec.family, k);
      std::vector<std::size_t> path;
      for (int i = 1; i < k; ++i) path.push_back(static_cast<std::size_t>(i - 1));
      return hexagon_tree(path);
    }
  }
  throw FamilyError("unknown family");
}

GridComplex hexagon_tree(const std::vector<std::size_t>& parents) {
  // Rim offsets in the clockwise order of a lone hexagon's canonical boundary walk.
  static constexpr std::array<GridVertex, 6> rim{{{-1, 0}, {-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}}};
  const std::size_t h = parents.size() + 1;
  struct Hexagon {
    VertexId center;
    std::array<VertexId, 6> rim;
    std::array<bool, 6> used{};
  };
  std::vector<GridVertex> images;
  std::vector<std::array<VertexId, 3>> faces;
  std::vector<Hexagon> hex;
  hex.reserve(h);
  auto fresh = [&](GridVertex p) {
    images.push_back(p);
    return static_cast<VertexId>(images.size() - 1);
  };
  auto emit_faces = [&](const Hexagon& x) {
    for (int j = 0; j < 6; ++j) faces.push_back({x.center, x.rim[j], x.rim[(j + 1) % 6]});
  };

  Hexagon root;
  root.center = fresh({0, 0});
  for (int j = 0; j < 6; ++j) root.rim[j] = fresh(rim[j]);
  hex.push_back(root);
  emit_faces(root);

  for (std::size_t i = 1; i < h; ++i) {
    std::size_t p = parents[i - 1];
    if (p >= i) throw FamilyError(fmt::format("hexagon {} must have an earlier parent, got {}", i, p));
    auto& parent = hex[p];
    int t = 0;
    while (t < 6 && parent.used[t]) ++t;
    if (t == 6) throw FamilyError(fmt::format("hexagon {} has no free pane left", p));
    parent.used[t] = true;
    GridVertex c = images[parent.center];
    GridVertex r0 = images[parent.rim[t]], r1 = images[parent.rim[(t + 1) % 6]];
    GridVertex cc = r0 + r1 - c;
    Hexagon child;
    child.center = fresh(cc);
    // The shared pane is the child's pane t + 3, traversed the other way.
    for (int j = 0; j < 6; ++j) {
      GridVertex q = cc + rim[j];
      if (q == r1) child.rim[j] = parent.rim[(t + 1) % 6];
      else if (q == r0) child.rim[j] = parent.rim[t];
      else child.rim[j] = fresh(q);
    }
    child.used[(t + 3) % 6] = true;
    hex.push_back(child);
    emit_faces(hex.back());
  }
  return GridComplex(std::move(images), std::move(faces));
}

std::vector<std::size_t> parse_parent_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw FamilyError(fmt::format("malformed parent list entry '{}'", item));
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace tribilliards
