#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bidhex/hex.hpp"
#include "bidhex/richman.hpp"

namespace bidhex {

// Random partial positions on boards of side 2..5 with between 1 and
// `max_empty` empty cells and uniformly coloured stones elsewhere. Decided
// positions are skipped when `ongoing_only` is set.
std::vector<Position> sample_positions(int count, int max_empty, std::uint64_t seed,
                                       bool ongoing_only = true);

// Empty 1x1, 2x2, 2x3 and 3x3 boards.
std::vector<Position> empty_reference_boards();

struct CheckReport {
  std::string name;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few, as position strings

  bool ok() const noexcept { return checked > 0 && failed == 0; }
};

// not_critical_count == 2 * losing_count for every open cell.
CheckReport check_losing_color_identity(const std::vector<Position>& positions);

// 1 - r_value == amber-winning fillings / 2^empties.
CheckReport check_richman_filling_agreement(const std::vector<Position>& positions,
                                            RichmanSolver& solver);

// For ongoing positions, with L the least losing-colour probability:
// 1/2 - L == delta, 1 - 2L == r_plus - r_minus, and the cells attaining L are
// exactly alice_optimal == bob_optimal.
CheckReport check_optimal_bid_agreement(const std::vector<Position>& positions,
                                        RichmanSolver& solver);

struct VerifyOptions {
  int max_empty = 8;
  int random_positions = 200;
  std::uint64_t seed = 1;
};

// Runs all three checks over the reference boards plus random positions.
// The identity check sees positions with up to max_empty empties; the
// solver-based checks cap at min(max_empty, solver cap).
std::vector<CheckReport> run_verification(const VerifyOptions& options);

}  // namespace bidhex
