#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bidhex/hex.hpp"

namespace bidhex::detail {

// Reusable buffers for the flood fill so the sampling loop does not allocate.
struct FloodScratch {
  std::vector<int> stack;
  std::vector<std::uint8_t> seen;
};

// True iff amber cells connect row 0 to row rows-1. Empty cells count as
// `empty_as`.
bool amber_connects(std::span<const CellState> cells, int rows, int cols,
                    CellState empty_as, FloodScratch& scratch);

}  // namespace bidhex::detail
