#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tribilliards/billiards.hpp"

namespace tribilliards {

struct DropOutcome {
  GridComplex result;
  std::size_t removed_faces = 0;
  // Old pane index -> new pane index; kNoIndex for the panes of the dropped cycle.
  std::vector<std::size_t> relabel;
};

// Raised when a rebuilt complex fails validation. Never expected for a valid
// input; it points at a bug in the surgery itself.
class SurgeryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Removes the faces crossed by the 60 and 180 degree beams of `cycle`, closes
// up every strip and collapses strips that vanished entirely. `cycle` must be
// one of perm.cycles (any rotation).
DropOutcome drop_cycle(const GridComplex& x, const BoundaryLoop& loop, const BilliardsPermutation& perm,
                       const std::vector<std::size_t>& cycle);
DropOutcome drop_cycle(const GridComplex& x, const std::vector<std::size_t>& cycle);
// Drops perm.cycles[index].
DropOutcome drop_cycle_at(const GridComplex& x, std::size_t index);

}  // namespace tribilliards
