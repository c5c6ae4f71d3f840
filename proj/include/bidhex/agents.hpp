#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "bidhex/game.hpp"
#include "bidhex/montecarlo.hpp"

namespace bidhex {

class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::int64_t choose_bid(const GameState& state, PlayerId self) = 0;
  virtual Cell choose_move(const GameState& state, PlayerId self) = 0;
};

// Bids and moves from criticality statistics: sampled fillings, or every
// filling when `exact` is set.
class AdvisorAgent : public Agent {
 public:
  struct Options {
    std::uint64_t trials = 300'000;
    // Per-decision seeds are derived from this seed and the game state, so a
    // replayed game makes the same decisions. Without it every decision
    // draws a fresh seed.
    std::optional<std::uint64_t> seed;
    int workers = 1;
    bool exact = false;
    bool random_tie_break = false;
  };

  explicit AdvisorAgent(Options options);

  std::int64_t choose_bid(const GameState& state, PlayerId self) override;
  // Moves to the cell chosen with the last bid when the position is
  // unchanged, else recomputes.
  Cell choose_move(const GameState& state, PlayerId self) override;

  BidAdvice advise_for(const GameState& state, PlayerId self);
  const std::optional<BidAdvice>& last_advice() const noexcept { return last_; }

 private:
  std::uint64_t decision_seed(const GameState& state, PlayerId self);

  Options options_;
  std::random_device entropy_;
  std::optional<BidAdvice> last_;
  std::optional<Position> last_position_;
};

// Uniform bid in [0, own chips] and a uniform empty cell.
class RandomAgent : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed) : rng_(seed) {}

  std::int64_t choose_bid(const GameState& state, PlayerId self) override;
  Cell choose_move(const GameState& state, PlayerId self) override;

 private:
  std::mt19937_64 rng_;
};

struct SelfPlayResult {
  GameState final_state;
  int rounds = 0;
};

// Plays until the game finishes. `observer`, when set, sees every state.
SelfPlayResult play_game(const GameConfig& config, Agent& alice, Agent& bob,
                         const std::function<void(const GameState&)>& observer = {});

}  // namespace bidhex
