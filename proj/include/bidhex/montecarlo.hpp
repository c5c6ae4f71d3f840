#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bidhex/hex.hpp"
#include "bidhex/rng.hpp"

namespace bidhex {

struct TrialConfig {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int workers = 1;

  // Throws Error(Config) for zero trials or fewer than one worker.
  void validate() const;
};

// Per-open-cell counts of how often the cell carried the losing colour.
// `cells` lists the open cells in row-major order; the count vectors are
// aligned with it.
struct CriticalityStats {
  std::uint64_t trials = 0;
  std::uint64_t amber_wins = 0;
  std::vector<Cell> cells;
  std::vector<std::uint64_t> losing_count;
  // Only filled by enumerate_stats: fillings where flipping the cell leaves
  // the winner unchanged.
  std::vector<std::uint64_t> not_critical_count;

  std::optional<std::size_t> find(Cell c) const;
  // Throws Error(Bounds) if `c` is not an open cell of the source position.
  std::uint64_t losing(Cell c) const;
  double l_hat(Cell c) const;
  double criticality(Cell c) const;  // 1 - 2 * l_hat

  friend bool operator==(const CriticalityStats&, const CriticalityStats&) = default;
};

struct BidAdvice {
  Cell hex;
  std::int64_t bid = 0;
  std::uint64_t losing_count = 0;
  std::uint64_t trials = 0;
  double l_hat = 0.0;
  double criticality = 0.0;
  GameStatus position_status = GameStatus::Ongoing;
};

struct AdviseOptions {
  // Pick uniformly among equally good cells instead of the first in
  // row-major order.
  bool random_tie_break = false;
  std::uint64_t tie_seed = 0;
};

inline constexpr int kEnumerationCap = 20;

// Each empty cell independently Amber or Blue with probability 1/2.
// Throws Error(GameOver) unless the position is Ongoing.
Filling sample_filling(const Position& position, TrialStream& stream);

// Trial i is filled from TrialStream(config.seed, i); worker w runs the
// trials with i % workers == w and the per-worker counts are summed.
CriticalityStats run_trials(const Position& position, const TrialConfig& config);

// Visits every filling once. Throws Error(TooLarge) past kEnumerationCap
// empties.
CriticalityStats enumerate_stats(const Position& position);

// Picks the open cell least often of the losing colour and bids
// floor((1/2 - L) * total_chips), clamped to [0, own_chips].
BidAdvice advise(const Position& position, const CriticalityStats& stats,
                 std::int64_t total_chips, std::int64_t own_chips,
                 const AdviseOptions& options = {});

}  // namespace bidhex
