#include "tribilliards/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace tribilliards {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? fmt::format("line {}: {}", line, what) : what), line_(line) {}

std::optional<InputFormat> format_from_name(std::string_view name) {
  if (name == "gridpoly") return InputFormat::GridPoly;
  if (name == "gridcomplex") return InputFormat::GridComplex;
  if (name == "word") return InputFormat::Word;
  return std::nullopt;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{n, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

int to_int(const Line& line, std::size_t i) {
  if (i >= line.tokens.size()) throw ParseError(line.number, "missing field");
  const auto& t = line.tokens[i];
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, fmt::format("expected an integer, got '{}'", t));
  }
  if (used != t.size()) throw ParseError(line.number, fmt::format("expected an integer, got '{}'", t));
  return v;
}

void expect_fields(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw ParseError(line.number, fmt::format("expected {} fields, got {}", n, line.tokens.size()));
}

bool is_trailer(const Line& line) { return line.tokens.size() == 1 && line.tokens[0].starts_with("removed="); }

GridComplex parse_gridpoly(const std::vector<Line>& lines) {
  std::vector<GridTriangle> tris;
  for (const auto& line : lines) {
    if (is_trailer(line)) continue;
    if (line.tokens[0] != "t") throw ParseError(line.number, fmt::format("unknown record '{}'", line.tokens[0]));
    expect_fields(line, 4);
    Orientation o;
    if (line.tokens[3] == "u")
      o = Orientation::Up;
    else if (line.tokens[3] == "d")
      o = Orientation::Down;
    else
      throw ParseError(line.number, "orientation must be 'u' or 'd'");
    tris.push_back({to_int(line, 1), to_int(line, 2), o});
  }
  return GridComplex::from_triangles(tris);
}

GridComplex parse_gridcomplex(const std::vector<Line>& lines) {
  std::map<long long, VertexId> ids;
  std::vector<GridVertex> images;
  std::vector<std::array<VertexId, 3>> faces;
  for (const auto& line : lines) {
    if (is_trailer(line)) continue;
    const auto& kw = line.tokens[0];
    if (kw == "v") {
      expect_fields(line, 4);
      long long id = to_int(line, 1);
      if (!ids.emplace(id, static_cast<VertexId>(images.size())).second)
        throw ParseError(line.number, fmt::format("duplicate vertex id {}", id));
      images.push_back({to_int(line, 2), to_int(line, 3)});
    } else if (kw == "f") {
      expect_fields(line, 4);
      std::array<VertexId, 3> f{};
      for (int i = 0; i < 3; ++i) {
        auto it = ids.find(to_int(line, 1 + i));
        if (it == ids.end()) throw ParseError(line.number, "face references an undeclared vertex");
        f[i] = it->second;
      }
      faces.push_back(f);
    } else {
      throw ParseError(line.number, fmt::format("unknown record '{}'", kw));
    }
  }
  return GridComplex(std::move(images), std::move(faces));
}

std::vector<Step> parse_steps(std::string_view word, std::size_t line) {
  std::vector<Step> steps;
  for (std::size_t i = 0; i < word.size();) {
    const char c = word[i];
    const char d = i + 1 < word.size() ? word[i + 1] : '\0';
    if (c == 'E' || c == 'W') {
      steps.push_back(c == 'E' ? Step::E : Step::W);
      i += 1;
    } else if ((c == 'N' || c == 'S') && (d == 'E' || d == 'W')) {
      if (c == 'N')
        steps.push_back(d == 'E' ? Step::NE : Step::NW);
      else
        steps.push_back(d == 'E' ? Step::SE : Step::SW);
      i += 2;
    } else {
      throw ParseError(line, fmt::format("bad direction at position {} of the word", i));
    }
  }
  return steps;
}

GridComplex polygon_from_steps(const std::vector<Step>& steps, std::size_t line) {
  if (steps.empty()) throw ParseError(line, "empty boundary word");
  std::vector<GridVertex> pts{{0, 0}};
  for (auto s : steps) pts.push_back(pts.back() + step_vector(s));
  if (pts.back() != GridVertex{0, 0}) throw ParseError(line, "open boundary");
  pts.pop_back();
  if (std::set<GridVertex>(pts.begin(), pts.end()).size() != pts.size())
    throw ParseError(line, "self-intersecting boundary");
  long long twice_area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) twice_area += cross(pts[i], pts[(i + 1) % pts.size()]);
  if (twice_area >= 0) throw ParseError(line, "boundary must run clockwise (interior on the right)");

  int amin = pts[0].a, amax = pts[0].a, bmin = pts[0].b, bmax = pts[0].b;
  for (auto p : pts) {
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  // Crossing-number test on centroids in tripled coordinates; centroid heights
  // are never multiples of 3, so the ray never meets a vertex.
  auto inside = [&](long long ca, long long cb) {
    bool in = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      long long pa = 3LL * pts[i].a, pb = 3LL * pts[i].b;
      long long qa = 3LL * pts[(i + 1) % pts.size()].a, qb = 3LL * pts[(i + 1) % pts.size()].b;
      if ((pb > cb) == (qb > cb)) continue;
      // intersection a = pa + (cb - pb) * (qa - pa) / (qb - pb) > ca
      long long num = (cb - pb) * (qa - pa), den = qb - pb;
      long long lhs = pa * den + num, rhs = ca * den;
      if (den > 0 ? lhs > rhs : lhs < rhs) in = !in;
    }
    return in;
  };
  std::vector<GridTriangle> tris;
  for (int b = bmin - 1; b <= bmax; ++b)
    for (int a = amin - 1; a <= amax; ++a) {
      if (inside(3LL * a + 1, 3LL * b + 1)) tris.push_back({a, b, Orientation::Up});
      if (inside(3LL * a + 2, 3LL * b + 2)) tris.push_back({a, b, Orientation::Down});
    }
  return GridComplex::from_triangles(tris);
}

}  // namespace

InputFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::istringstream ls(raw);
    std::string first, second;
    ls >> first;
    if (first.empty()) continue;
    if (first == "#") {
      ls >> second;
      if (auto f = format_from_name(second)) return *f;
      continue;
    }
    if (first[0] == '#') {
      if (auto f = format_from_name(first.substr(1))) return *f;
      continue;
    }
    if (first == "t") return InputFormat::GridPoly;
    if (first == "v" || first == "f") return InputFormat::GridComplex;
    if (first == "w") return InputFormat::Word;
    throw ParseError(0, fmt::format("cannot detect input format from '{}'", first));
  }
  throw ParseError(0, "empty input");
}

GridComplex complex_from_word(std::string_view word) { return polygon_from_steps(parse_steps(word, 0), 0); }

GridComplex parse_complex(std::string_view text, std::optional<InputFormat> format) {
  InputFormat fmt_ = format ? *format : detect_format(text);
  auto lines = tokenize(text);
  switch (fmt_) {
    case InputFormat::GridPoly: return parse_gridpoly(lines);
    case InputFormat::GridComplex: return parse_gridcomplex(lines);
    case InputFormat::Word: {
      const Line* w = nullptr;
      for (const auto& line : lines) {
        if (is_trailer(line)) continue;
        if (line.tokens[0] != "w" || w) throw ParseError(line.number, "expected a single 'w <word>' record");
        expect_fields(line, 2);
        w = &line;
      }
      if (!w) throw ParseError(0, "missing 'w' record");
      return polygon_from_steps(parse_steps(w->tokens[1], w->number), w->number);
    }
  }
  throw ParseError(0, "unknown format");
}

std::string serialize_gridcomplex(const GridComplex& x) {
  std::vector<VertexId> order(x.vertex_count());
  for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId p, VertexId q) { return x.image(p) < x.image(q); });
  std::vector<VertexId> renum(x.vertex_count());
  for (VertexId i = 0; i < order.size(); ++i) renum[order[i]] = i;
  std::string out = "# gridcomplex v1\n";
  for (VertexId i = 0; i < order.size(); ++i) {
    auto p = x.image(order[i]);
    out += fmt::format("v {} {} {}\n", i, p.a, p.b);
  }
  std::vector<std::array<VertexId, 3>> faces;
  for (const auto& f : x.faces()) {
    std::array<VertexId, 3> t{renum[f.roles[0]], renum[f.roles[1]], renum[f.roles[2]]};
    std::sort(t.begin(), t.end());
    faces.push_back(t);
  }
  std::sort(faces.begin(), faces.end());
  for (const auto& f : faces) out += fmt::format("f {} {} {}\n", f[0], f[1], f[2]);
  return out;
}

std::string serialize_gridpoly(const GridComplex& x) {
  std::vector<GridTriangle> tris;
  for (const auto& f : x.faces()) tris.push_back(f.image);
  std::sort(tris.begin(), tris.end());
  if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
    throw std::invalid_argument("complex overlaps itself; gridpoly cannot represent it");
  std::string out = "# gridpoly v1\n";
  for (const auto& t : tris) out += fmt::format("t {} {} {}\n", t.a, t.b, orientation_char(t.orientation));
  return out;
}

std::string serialize_word(const GridComplex& x) {
  return "# word v1\nw " + canonical_boundary_word(x) + "\n";
}

}  // namespace tribilliards
