#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bidhex/hex.hpp"

namespace bidhex {

// Alice plays Amber, Bob plays Blue.
enum class PlayerId : std::uint8_t { Alice = 0, Bob = 1 };

constexpr PlayerId other(PlayerId p) noexcept {
  return p == PlayerId::Alice ? PlayerId::Bob : PlayerId::Alice;
}
constexpr Color color_of(PlayerId p) noexcept {
  return p == PlayerId::Alice ? Color::Amber : Color::Blue;
}
constexpr std::size_t slot(PlayerId p) noexcept { return static_cast<std::size_t>(p); }

const char* player_name(PlayerId p);  // "alice" / "bob"
std::optional<PlayerId> parse_player(std::string_view name);

struct TiePolicy {
  enum class Kind { AdvantageMarker, FixedWinner };

  // Under AdvantageMarker `player` is the initial marker holder; under
  // FixedWinner it wins every tie.
  Kind kind = Kind::AdvantageMarker;
  PlayerId player = PlayerId::Bob;

  static TiePolicy advantage_marker(PlayerId initial_holder) {
    return {Kind::AdvantageMarker, initial_holder};
  }
  static TiePolicy fixed_winner(PlayerId winner) { return {Kind::FixedWinner, winner}; }

  friend bool operator==(const TiePolicy&, const TiePolicy&) = default;
};

struct GameConfig {
  int size = 11;
  std::int64_t chips_alice = 100;
  std::int64_t chips_bob = 100;
  TiePolicy tie_policy;

  std::int64_t total_chips() const noexcept { return chips_alice + chips_bob; }
  // Throws Error(Config).
  void validate() const;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

struct AwaitingBids {
  std::array<std::optional<std::int64_t>, 2> pending;

  friend bool operator==(const AwaitingBids&, const AwaitingBids&) = default;
};
struct AwaitingMove {
  PlayerId mover;

  friend bool operator==(const AwaitingMove&, const AwaitingMove&) = default;
};
struct Finished {
  PlayerId winner;

  friend bool operator==(const Finished&, const Finished&) = default;
};
using Phase = std::variant<AwaitingBids, AwaitingMove, Finished>;

struct BidsResolved {
  std::int64_t alice_bid;
  std::int64_t bob_bid;
  PlayerId winner;
  std::int64_t transfer;

  friend bool operator==(const BidsResolved&, const BidsResolved&) = default;
};
struct MovePlaced {
  PlayerId player;
  Cell cell;

  friend bool operator==(const MovePlaced&, const MovePlaced&) = default;
};
struct GameEnded {
  PlayerId winner;

  friend bool operator==(const GameEnded&, const GameEnded&) = default;
};
using Event = std::variant<BidsResolved, MovePlaced, GameEnded>;

struct GameState {
  GameConfig config;
  Position position;
  std::array<std::int64_t, 2> chips{};
  Phase phase;
  PlayerId advantage_holder = PlayerId::Bob;
  std::vector<Event> history;

  std::int64_t chips_of(PlayerId p) const noexcept { return chips[slot(p)]; }
  bool finished() const noexcept { return std::holds_alternative<Finished>(phase); }
  // True if `p` has a sealed bid waiting for the other player.
  bool has_pending_bid(PlayerId p) const noexcept;

  friend bool operator==(const GameState&, const GameState&) = default;
};

GameState new_game(const GameConfig& config);

// Seals `player`'s bid. When both bids are in, the higher bidder (or the tie
// winner) pays their bid to the other player and must move next.
GameState submit_bid(const GameState& state, PlayerId player, std::int64_t bid);

// Places the mover's stone.
GameState apply_move(const GameState& state, Cell cell);

// Inclusive range of legal bids, (0, chips).
std::pair<std::int64_t, std::int64_t> legal_bid_range(const GameState& state,
                                                      PlayerId player);

// Folds `history` over new_game(config). Throws Error if an event is not
// reproduced by the rules.
GameState replay(const GameConfig& config, std::span<const Event> history);

}  // namespace bidhex
