#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tribilliards/complex.hpp"

namespace tribilliards {

struct BeamSegment {
  std::size_t source = 0;  // boundary pane index (0-based)
  std::size_t target = 0;
  BeamDirection direction = BeamDirection::Deg60;
  std::vector<FaceId> crossed;
};

struct BilliardsPermutation {
  std::size_t n = 0;
  std::vector<std::size_t> map;                  // pane index -> pane index
  std::vector<std::vector<std::size_t>> cycles;  // each starts at its smallest index; sorted
  std::vector<BeamSegment> segments;             // segments[i].source == i

  std::size_t cyc() const { return cycles.size(); }
  // Sorted cycle lengths.
  std::vector<std::size_t> cycle_type() const;
  // Index into `cycles` of the cycle containing pane i.
  std::size_t cycle_of(std::size_t i) const;
};

class ClosedOrbitError : public InvalidComplexError {
 public:
  using InvalidComplexError::InvalidComplexError;
};

BeamSegment trace_beam(const GridComplex& x, const BoundaryLoop& loop, std::size_t start);
BeamSegment trace_beam(const GridComplex& x, std::size_t start);

// Runs the beam backwards from `target` (the reflection rule with the two
// triangle orientations swapped); returns the pane it reaches.
std::size_t trace_reverse(const GridComplex& x, const BoundaryLoop& loop, std::size_t target);

BilliardsPermutation billiards_permutation(const GridComplex& x, const BoundaryLoop& loop);
BilliardsPermutation billiards_permutation(const GridComplex& x);

// For every face, the indices of the segments crossing it.
std::vector<std::vector<std::size_t>> beam_incidence_table(const GridComplex& x,
                                                           const BilliardsPermutation& perm);

// +1 when the beams of the cycle run counterclockwise, -1 clockwise, 0 if the
// enclosed signed area vanishes.
int cycle_orientation(const GridComplex& x, const BoundaryLoop& loop, const std::vector<std::size_t>& cycle);

// "perim=<n> area=<m> comps=<c> cyc=<k>" followed by one "( i1 i2 ... )" line per
// cycle, 1-based.
std::string permutation_report(const GridComplex& x, const BilliardsPermutation& perm);

std::string cycle_type_string(const std::vector<std::size_t>& type);

}  // namespace tribilliards
