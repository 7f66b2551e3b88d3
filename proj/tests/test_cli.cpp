#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tribilliards/billiards.hpp"
#include "tribilliards/census.hpp"
#include "tribilliards/cli.hpp"
#include "tribilliards/io.hpp"
#include "xml_check.hpp"

using namespace tribilliards;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, bool color = false) {
  std::ostringstream out, err;
  int code = run(args, out, err, color);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tribilliards-cli-" + std::to_string(std::rand()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("simulate") {
  TempDir dir;
  auto hex = dir.write("hexagon.gridpoly", serialize_gridpoly(fixtures::hexagon()));
  auto r = call({"simulate", hex});
  CHECK(r.code == 0);
  CHECK(r.out == "perim=6 area=6 comps=1 cyc=2\n( 1 5 3 )\n( 2 4 6 )\n");

  auto word = dir.write("hexagon.word", "w ESESWWNWNE\n");
  CHECK(call({"simulate", word}).out == r.out);
  auto forced = call({"simulate", word, "--format", "word"});
  CHECK(forced.out == r.out);
  CHECK(call({"simulate", word, "--format", "svg"}).code == 2);
}

TEST_CASE("drop") {
  TempDir dir;
  auto hex = dir.write("hexagon.gridpoly", serialize_gridpoly(fixtures::hexagon()));
  auto out = dir.file("t.gridcomplex");
  auto r = call({"drop", hex, "--cycle", "1", "-o", out});
  CHECK(r.code == 0);
  CHECK(r.out == "removed=5\n");
  auto text = slurp(out);
  CHECK(text.find("removed=5") != std::string::npos);
  auto t = parse_complex(text);
  CHECK(t.face_count() == 1);
  CHECK(call({"drop", hex, "--cycle", "3", "-o", out}).code == 1);
  CHECK(call({"drop", hex, "--cycle", "0"}).code == 2);
  CHECK(call({"drop", hex}).code == 2);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--max-area", "4", "--bound", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
  CHECK(r.out.find("\x1b[") == std::string::npos);

  TempDir dir;
  auto rep = dir.file("report.txt");
  auto s = call({"verify", "--max-area", "7", "--jobs", "2", "--report", rep});
  CHECK(s.code == 0);
  auto text = slurp(rep);
  CHECK(text.rfind("verify max_area=7 bound=both", 0) == 0);
  CHECK(text.find("ESESWWNWNE perim=6 area=6 cyc=2 cycles={3,3}") != std::string::npos);
  CHECK(call({"verify", "--max-area", "3", "--bound", "sideways"}).code == 2);
  CHECK(call({"verify"}).code == 2);
}

TEST_CASE("color only when allowed") {
  auto colored = call({"verify", "--max-area", "2"}, true);
  CHECK(colored.out.find("\x1b[32m") != std::string::npos);
  setenv("TRIBILLIARDS_NO_COLOR", "1", 1);
  auto plain = call({"verify", "--max-area", "2"}, true);
  unsetenv("TRIBILLIARDS_NO_COLOR");
  CHECK(plain.out.find("\x1b[") == std::string::npos);
}

TEST_CASE("family") {
  TempDir dir;
  auto out = dir.file("cr.gridcomplex");
  auto r = call({"family", "cut_rhombus", "--k", "2", "-o", out});
  CHECK(r.code == 0);
  CHECK(r.out == "perim=14 area=30 comps=1 cyc=4 cycles={3,3,4,4}\n");
  CHECK(billiards_permutation(parse_complex(slurp(out))).cycle_type() == std::vector<std::size_t>{3, 3, 4, 4});
  auto tree = call({"family", "hexagon_tree", "--tree", "0,0,1"});
  CHECK(tree.code == 0);
  CHECK(parse_complex(tree.out).area() == 24);
  CHECK(call({"family", "rhombus", "--k", "0"}).code == 1);
  CHECK(call({"family", "pentagon"}).code == 2);
  CHECK(call({"family", "rhombus", "--tree", "0"}).code == 2);
}

TEST_CASE("census and search") {
  auto c = call({"census-perim6"});
  CHECK(c.code == 0);
  CHECK(c.out.find("same_orientation=0") != std::string::npos);
  auto s = call({"search-ambiguous", "--max-faces", "6"});
  CHECK(s.code == 0);
  CHECK(s.out == "max_faces=6 pairs=0\n");
}

TEST_CASE("render") {
  TempDir dir;
  auto hex = dir.write("hexagon.gridpoly", serialize_gridpoly(fixtures::hexagon()));
  auto out = dir.file("h.svg");
  CHECK(call({"render", hex, "-o", out, "--beams", "cycle:2", "--labels"}).code == 0);
  auto svg = slurp(out);
  CHECK(oracle::well_formed_xml(svg));
  CHECK(svg.find("class=\"trajectory\"") != std::string::npos);
  CHECK(call({"render", hex, "-o", out, "--beams", "cycle:x"}).code == 2);
  CHECK(call({"render", hex, "-o", out, "--beams", "cycle:9"}).code == 1);
  CHECK(call({"render", hex}).code == 2);
}

TEST_CASE("errors and usage") {
  TempDir dir;
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"simulate", "--bogus", "x"}).code == 2);
  CHECK(call({"simulate", dir.file("missing.gridpoly")}).code == 1);
  auto bad = dir.write("bad.gridpoly", "t 0 0 u\nt 0 zero u\n");
  auto r = call({"simulate", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  auto folded = dir.write("folded.gridcomplex", "v 0 0 0\nv 1 1 0\nv 2 0 1\nv 3 0 1\nf 0 1 2\nf 0 1 3\n");
  auto f = call({"simulate", folded});
  CHECK(f.code == 1);
  CHECK(f.err.find("diamond") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("file round trips match in-memory simulation") {
  TempDir dir;
  for (const auto& x : enumerate_polyiamonds(6)) {
    auto expected = permutation_report(x, billiards_permutation(x));
    auto p1 = dir.write("x.gridcomplex", serialize_gridcomplex(x));
    auto p2 = dir.write("x.gridpoly", serialize_gridpoly(x));
    CHECK(call({"simulate", p1}).out == expected);
    CHECK(call({"simulate", p2}).out == expected);
  }
}
