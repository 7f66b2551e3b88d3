#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tribilliards/billiards.hpp"

namespace tribilliards {

// A polyiamond as sorted tripled centroids: up(a,b) -> (3a+1, 3b+1),
// down(a,b) -> (3a+2, 3b+2).
using Polyiamond = std::vector<std::array<int, 2>>;

Polyiamond to_polyiamond(const std::vector<GridTriangle>& triangles);
std::vector<GridTriangle> to_triangles(const Polyiamond& p);

// Lexicographically smallest image under the 12 lattice symmetries, translated
// so that the smallest coordinates fall in the first lattice cell.
Polyiamond canonical_polyiamond(const Polyiamond& p);

// All edge-connected polyiamonds of area 1..max_area up to symmetry, holey ones
// included, ordered by area then canonical form.
std::vector<Polyiamond> enumerate_polyiamond_shapes(std::size_t max_area);

// The hole-free shapes as complexes, in the same order.
std::vector<GridComplex> enumerate_polyiamonds(std::size_t max_area);

// Every indecomposable complex with at most max_faces faces that strips glued
// along horizontal runs can produce, one per translation class, ordered by
// area then canonical form. Overlapping images are included.
std::vector<GridComplex> enumerate_strip_tree_complexes(std::size_t max_faces);

bool is_hexagon_tree(const GridComplex& x);

enum class BoundKind { Perimeter, Area, Both };

std::string_view bound_name(BoundKind b);

struct EqualityCase {
  std::string word;
  std::size_t perim = 0;
  std::size_t area = 0;
  std::size_t cyc = 0;
  std::vector<std::size_t> cycle_type;
  bool perimeter_equality = false;
  bool area_equality = false;
};

struct VerificationReport {
  std::size_t max_area = 0;
  BoundKind bound = BoundKind::Both;
  std::size_t corpus_size = 0;
  std::vector<std::string> violations;
  std::vector<EqualityCase> equality_cases;
  std::size_t perimeter_equalities = 0;
  std::size_t primitive_perimeter_equalities = 0;
  std::size_t area_equalities = 0;
  std::size_t hexagon_trees = 0;
  double seconds = 0;

  bool ok() const { return violations.empty(); }
  std::string header() const;
  // Header, violation lines, then one line per equality case.
  std::string render() const;
};

// Checks cyc <= (perim + 2 comps)/4, cyc <= area/6 + comps and the weaker
// cyc <= 2/7 (perim + 3/2) in integers, the cycle type of primitive
// perimeter-equality cases, and that area equality coincides with
// is_hexagon_tree. Work is split over `jobs` threads; output order does not
// depend on it.
VerificationReport verify_corpus(const std::vector<GridComplex>& corpus, BoundKind which, unsigned jobs = 1);
VerificationReport verify_bounds(std::size_t max_area, BoundKind which, unsigned jobs = 1);

struct Perim6Census {
  std::vector<std::string> loops;  // canonical words
  std::size_t periodic_loops = 0;
  std::size_t max_faces = 0;
  std::size_t complexes_searched = 0;
  std::size_t realizations = 0;  // searched complexes whose boundary is one of the loops
  std::size_t same_orientation = 0;
  std::size_t only_three_cycles = 0;
  std::vector<std::string> only_three_exceptions;

  std::size_t loop_count() const { return loops.size(); }
  std::string render() const;
};

// Boundary words of length 6 with exactly two panes in each of the 60, 180
// and 300 degree directions, up to rotation, and the search of their
// realizations among strip-tree complexes with at most max_faces faces.
Perim6Census census_perim6_loops(std::size_t max_faces = 8);

// Pane permutation indexed from the canonical rotation of the boundary word;
// equal keys mean equal permutations on the same boundary.
std::vector<std::size_t> aligned_permutation(const GridComplex& x);

std::vector<std::pair<GridComplex, GridComplex>> search_boundary_ambiguous(std::size_t max_faces);

}  // namespace tribilliards
