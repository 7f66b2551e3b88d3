#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tribilliards/complex.hpp"

namespace tribilliards {

struct RenderOptions {
  enum class Beams { None, All, Cycle };

  double scale = 40.0;  // pixels per unit edge
  Beams beams = Beams::All;
  std::size_t cycle = 0;  // 0-based, used with Beams::Cycle
  bool label_panes = false;
  std::vector<std::string> palette{"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                                   "#e377c2", "#17becf"};
};

// SVG 1.1 document. Faces are class "face", boundary panes "pane", each drawn
// cycle a closed "trajectory" polyline through the pane midpoints, and pane
// labels "label". Components whose images overlap are shifted slightly apart
// and listed in a legend.
std::string render_svg(const GridComplex& x, const RenderOptions& opts = {});

}  // namespace tribilliards
