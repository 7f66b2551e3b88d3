#include "tribilliards/render.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "tribilliards/billiards.hpp"

namespace tribilliards {

namespace {

constexpr double kJitter = 0.12;
constexpr double kMargin = 0.6;

}  // namespace

std::string render_svg(const GridComplex& x, const RenderOptions& opts) {
  if (!(opts.scale > 0)) throw std::invalid_argument("scale must be positive");
  std::size_t ncomp = 0;
  auto comp = face_components(x, &ncomp);

  std::map<GridTriangle, std::size_t> owner;
  bool overlap = false;
  for (FaceId f = 0; f < x.face_count(); ++f) {
    auto [it, fresh] = owner.emplace(x.face(f).image, comp[f]);
    if (!fresh && it->second != comp[f]) overlap = true;
  }
  auto shift = [&](std::size_t c) { return overlap ? kJitter * static_cast<double>(c) : 0.0; };
  auto at = [&](GridVertex v, std::size_t c) {
    auto p = embed(v);
    return Point2{p.x + shift(c), p.y + shift(c)};
  };

  double minx = std::numeric_limits<double>::max(), miny = minx;
  double maxx = std::numeric_limits<double>::lowest(), maxy = maxx;
  for (FaceId f = 0; f < x.face_count(); ++f)
    for (auto v : x.face(f).roles) {
      auto p = at(x.image(v), comp[f]);
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  if (x.empty()) minx = miny = maxx = maxy = 0;
  const double s = opts.scale;
  const double width = (maxx - minx + 2 * kMargin) * s;
  const double height = (maxy - miny + 2 * kMargin) * s + (overlap ? 16.0 * static_cast<double>(ncomp) : 0.0);
  auto sx = [&](Point2 p) { return (p.x - minx + kMargin) * s; };
  auto sy = [&](Point2 p) { return (maxy - p.y + kMargin) * s; };
  auto px = [&](Point2 p) { return fmt::format("{:.2f},{:.2f}", sx(p), sy(p)); };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.2f}\" height=\"{:.2f}\" "
      "viewBox=\"0 0 {:.2f} {:.2f}\">\n",
      width, height, width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += fmt::format("<g id=\"faces\" stroke=\"#999999\" stroke-width=\"1\" fill-opacity=\"{}\">\n",
                     overlap ? "0.35" : "0.8");
  for (FaceId f = 0; f < x.face_count(); ++f) {
    const auto& r = x.face(f).roles;
    out += fmt::format("<polygon class=\"face\" points=\"{} {} {}\" fill=\"{}\"/>\n", px(at(x.image(r[0]), comp[f])),
                       px(at(x.image(r[1]), comp[f])), px(at(x.image(r[2]), comp[f])),
                       x.face(f).image.orientation == Orientation::Up ? "#f2e6c9" : "#e8d8b0");
  }
  out += "</g>\n";

  auto loop = boundary_walk(x);
  auto mid = [&](std::size_t i) {
    const auto& p = loop[i];
    auto a = at(x.image(p.tail), comp[p.face]), b = at(x.image(p.head), comp[p.face]);
    return Point2{(a.x + b.x) / 2, (a.y + b.y) / 2};
  };
  out += "<g id=\"panes\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& p = loop[i];
    auto a = at(x.image(p.tail), comp[p.face]), b = at(x.image(p.head), comp[p.face]);
    out += fmt::format("<line class=\"pane\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", sx(a), sy(a),
                       sx(b), sy(b));
  }
  out += "</g>\n";

  if (opts.beams != RenderOptions::Beams::None && !x.empty()) {
    auto perm = billiards_permutation(x, loop);
    std::vector<std::size_t> which;
    if (opts.beams == RenderOptions::Beams::All) {
      for (std::size_t c = 0; c < perm.cycles.size(); ++c) which.push_back(c);
    } else {
      if (opts.cycle >= perm.cycles.size())
        throw std::out_of_range(fmt::format("cycle {} does not exist (cyc={})", opts.cycle + 1, perm.cycles.size()));
      which.push_back(opts.cycle);
    }
    out += "<g id=\"beams\" fill=\"none\" stroke-width=\"2\">\n";
    for (auto c : which) {
      const auto& cyc = perm.cycles[c];
      std::string pts;
      for (std::size_t k = 0; k <= cyc.size(); ++k) pts += (k ? " " : "") + px(mid(cyc[k % cyc.size()]));
      const auto& color = opts.palette.empty() ? std::string("black") : opts.palette[c % opts.palette.size()];
      out += fmt::format("<polyline class=\"trajectory\" data-cycle=\"{}\" stroke=\"{}\" points=\"{}\"/>\n", c + 1,
                         color, pts);
    }
    out += "</g>\n";
  }

  if (opts.label_panes) {
    out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < loop.size(); ++i) {
      auto m = mid(i);
      out += fmt::format("<text class=\"label\" x=\"{:.2f}\" y=\"{:.2f}\">b{}</text>\n", sx(m), sy(m), i + 1);
    }
    out += "</g>\n";
  }

  if (overlap) {
    out += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t c = 0; c < ncomp; ++c)
      out += fmt::format("<text x=\"6\" y=\"{:.2f}\">component {} shifted by ({:.2f}, {:.2f})</text>\n",
                         (maxy - miny + 2 * kMargin) * s + 12.0 + 16.0 * static_cast<double>(c), c + 1, shift(c),
                         shift(c));
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tribilliards
