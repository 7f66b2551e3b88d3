#include "tribilliards/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tribilliards/billiards.hpp"
#include "tribilliards/census.hpp"
#include "tribilliards/families.hpp"
#include "tribilliards/io.hpp"
#include "tribilliards/render.hpp"
#include "tribilliards/strips.hpp"
#include "tribilliards/surgery.hpp"

namespace tribilliards {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(fmt::format("cannot read '{}'", path));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o || !(o << text)) throw DomainError(fmt::format("cannot write '{}'", path));
}

GridComplex load(const std::string& path, const std::string& format) {
  std::optional<InputFormat> f;
  if (!format.empty()) {
    f = format_from_name(format);
    if (!f) throw UsageError(fmt::format("unknown format '{}'", format));
  }
  return parse_complex(read_file(path), f);
}

std::string paint(bool color, bool good, const std::string& text) {
  if (!color) return text;
  return fmt::format("\x1b[{}m{}\x1b[0m", good ? 32 : 31, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  color = color && std::getenv("TRIBILLIARDS_NO_COLOR") == nullptr;

  CLI::App app{"Triangular-grid billiards on generalized grid polygons", "tribilliards"};
  app.require_subcommand(1, 1);
  std::string format;

  std::string sim_file;
  auto* simulate = app.add_subcommand("simulate", "Print the billiards permutation of a polygon");
  simulate->add_option("file", sim_file, "Input file")->required();
  simulate->add_option("--format", format, "gridpoly, gridcomplex or word");

  std::string drop_file, drop_out;
  std::size_t drop_index = 0;
  auto* drop = app.add_subcommand("drop", "Remove one cycle and write the resulting complex");
  drop->add_option("file", drop_file, "Input file")->required();
  drop->add_option("--cycle", drop_index, "Cycle number as listed by simulate (1-based)")->required();
  drop->add_option("-o,--output", drop_out, "Output gridcomplex file");
  drop->add_option("--format", format, "gridpoly, gridcomplex or word");

  std::size_t max_area = 0;
  std::string bound = "both", report_file;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Check the cycle bounds on every polyiamond up to an area");
  verify->add_option("--max-area", max_area, "Largest area enumerated")->required();
  verify->add_option("--bound", bound, "perim, area or both")->check(CLI::IsMember({"perim", "area", "both"}));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_file, "Write the full report here");

  std::string family_name_arg, tree, family_out;
  int k = 1;
  auto* family = app.add_subcommand("family", "Build a member of an extremal family");
  family->add_option("name", family_name_arg, "rhombus, cut_rhombus, trunc_4k1, trunc_4k3, hexagon_tree")
      ->required();
  family->add_option("--k", k, "Size parameter");
  family->add_option("--tree", tree, "hexagon_tree parent list, e.g. 0,0,1");
  family->add_option("-o,--output", family_out, "Output gridcomplex file");

  std::size_t census_faces = 8;
  auto* census = app.add_subcommand("census-perim6", "Enumerate the perimeter-6 boundary loops");
  census->add_option("--max-faces", census_faces, "Face bound for the realization search");

  std::size_t search_faces = 6;
  auto* search = app.add_subcommand("search-ambiguous", "Find complexes sharing a boundary but not a permutation");
  search->add_option("--max-faces", search_faces, "Face bound")->required();

  std::string render_file, render_out, beams = "all";
  bool labels = false;
  double scale = 40.0;
  auto* render = app.add_subcommand("render", "Draw a polygon and its beams as SVG");
  render->add_option("file", render_file, "Input file")->required();
  render->add_option("-o,--output", render_out, "Output SVG file")->required();
  render->add_option("--beams", beams, "all, none or cycle:<i>");
  render->add_flag("--labels", labels, "Label the boundary panes");
  render->add_option("--scale", scale, "Pixels per unit edge")->check(CLI::PositiveNumber);
  render->add_option("--format", format, "gridpoly, gridcomplex or word");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      auto x = load(sim_file, format);
      out << permutation_report(x, billiards_permutation(x));
      return kExitOk;
    }
    if (drop->parsed()) {
      auto x = load(drop_file, format);
      if (drop_index == 0) throw UsageError("--cycle is 1-based");
      auto outcome = drop_cycle_at(x, drop_index - 1);
      auto trailer = fmt::format("removed={}\n", outcome.removed_faces);
      if (drop_out.empty()) {
        out << serialize_gridcomplex(outcome.result) << trailer;
      } else {
        write_file(drop_out, serialize_gridcomplex(outcome.result) + trailer);
        out << trailer;
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      if (max_area == 0) throw UsageError("--max-area must be at least 1");
      BoundKind which = bound == "perim" ? BoundKind::Perimeter : bound == "area" ? BoundKind::Area : BoundKind::Both;
      auto rep = verify_bounds(max_area, which, jobs);
      if (!report_file.empty()) {
        write_file(report_file, rep.render());
        out << paint(color, rep.ok(), rep.header()) << "\n";
      } else {
        auto text = rep.render();
        out << paint(color, rep.ok(), rep.header()) << text.substr(rep.header().size());
      }
      err << fmt::format("verified {} polygons in {:.3f}s\n", rep.corpus_size, rep.seconds);
      return rep.ok() ? kExitOk : kExitViolation;
    }
    if (family->parsed()) {
      auto f = family_from_name(family_name_arg);
      if (!f) throw UsageError(fmt::format("unknown family '{}'", family_name_arg));
      FamilySpec spec{*f, k, parse_parent_list(tree)};
      if (!tree.empty() && *f != Family::HexagonTree) throw UsageError("--tree only applies to hexagon_tree");
      auto x = make_family(spec);
      auto perm = billiards_permutation(x);
      auto summary = fmt::format("perim={} area={} comps={} cyc={} cycles={}\n", perimeter(x), x.area(),
                                 component_count(x), perm.cyc(), cycle_type_string(perm.cycle_type()));
      if (family_out.empty()) {
        out << serialize_gridcomplex(x);
      } else {
        write_file(family_out, serialize_gridcomplex(x));
        out << summary;
      }
      return kExitOk;
    }
    if (census->parsed()) {
      auto c = census_perim6_loops(census_faces);
      out << c.render();
      bool ok = c.same_orientation == 0 && c.only_three_exceptions.empty();
      return ok ? kExitOk : kExitViolation;
    }
    if (search->parsed()) {
      auto pairs = search_boundary_ambiguous(search_faces);
      out << fmt::format("max_faces={} pairs={}\n", search_faces, pairs.size());
      if (!pairs.empty()) {
        const auto& [a, b] = pairs.front();
        out << "boundary " << canonical_boundary_word(a) << "\n";
        for (const auto* x : {&a, &b}) {
          out << permutation_report(*x, billiards_permutation(*x));
          out << serialize_gridcomplex(*x);
        }
      }
      return kExitOk;
    }
    if (render->parsed()) {
      auto x = load(render_file, format);
      RenderOptions opts;
      opts.scale = scale;
      opts.label_panes = labels;
      if (beams == "all") {
        opts.beams = RenderOptions::Beams::All;
      } else if (beams == "none") {
        opts.beams = RenderOptions::Beams::None;
      } else if (beams.rfind("cycle:", 0) == 0) {
        std::size_t i = 0;
        try {
          i = std::stoul(beams.substr(6));
        } catch (const std::exception&) {
          throw UsageError(fmt::format("bad --beams value '{}'", beams));
        }
        if (i == 0) throw UsageError("cycle numbers are 1-based");
        opts.beams = RenderOptions::Beams::Cycle;
        opts.cycle = i - 1;
      } else {
        throw UsageError(fmt::format("bad --beams value '{}'", beams));
      }
      write_file(render_out, render_svg(x, opts));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidComplexError& e) {
    err << paint(color, false, "error:") << " " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << paint(color, false, "error:") << " " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace tribilliards
