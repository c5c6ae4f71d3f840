#include "bidhex/game.hpp"

#include <string>

namespace bidhex {

const char* player_name(PlayerId p) { return p == PlayerId::Alice ? "alice" : "bob"; }

std::optional<PlayerId> parse_player(std::string_view name) {
  if (name == "alice") return PlayerId::Alice;
  if (name == "bob") return PlayerId::Bob;
  return std::nullopt;
}

void GameConfig::validate() const {
  if (size < 1 || size > kMaxBoardSize) {
    throw Error(ErrorCode::Config, "board size must be in [1, " +
                                       std::to_string(kMaxBoardSize) + "]");
  }
  if (chips_alice < 0 || chips_bob < 0) {
    throw Error(ErrorCode::Config, "chip counts must be non-negative");
  }
  if (chips_alice + chips_bob < 2) {
    throw Error(ErrorCode::Config, "the two chip counts must total at least 2");
  }
}

bool GameState::has_pending_bid(PlayerId p) const noexcept {
  const auto* bids = std::get_if<AwaitingBids>(&phase);
  return bids && bids->pending[slot(p)].has_value();
}

namespace {

const char* phase_name(const Phase& phase) {
  if (std::holds_alternative<AwaitingBids>(phase)) return "awaiting bids";
  if (std::holds_alternative<AwaitingMove>(phase)) return "awaiting a move";
  return "finished";
}

[[noreturn]] void wrong_phase(const GameState& state, const char* wanted) {
  throw Error(ErrorCode::Phase, std::string("game is ") + phase_name(state.phase) +
                                    ", not " + wanted);
}

}  // namespace

GameState new_game(const GameConfig& config) {
  config.validate();
  return GameState{
      .config = config,
      .position = Position(config.size),
      .chips = {config.chips_alice, config.chips_bob},
      .phase = AwaitingBids{},
      .advantage_holder = config.tie_policy.player,
      .history = {},
  };
}

GameState submit_bid(const GameState& state, PlayerId player, std::int64_t bid) {
  const auto* bids = std::get_if<AwaitingBids>(&state.phase);
  if (!bids) wrong_phase(state, "awaiting bids");
  if (bids->pending[slot(player)]) {
    throw Error(ErrorCode::DuplicateBid,
                std::string(player_name(player)) + " has already bid this round");
  }
  if (bid < 0 || bid > state.chips_of(player)) {
    throw Error(ErrorCode::IllegalBid,
                std::string(player_name(player)) + " bid " + std::to_string(bid) +
                    " outside [0, " + std::to_string(state.chips_of(player)) + "]");
  }

  GameState next = state;
  auto& pending = std::get<AwaitingBids>(next.phase).pending;
  pending[slot(player)] = bid;
  if (!pending[0] || !pending[1]) return next;

  const std::int64_t alice_bid = *pending[slot(PlayerId::Alice)];
  const std::int64_t bob_bid = *pending[slot(PlayerId::Bob)];
  PlayerId winner;
  if (alice_bid != bob_bid) {
    winner = alice_bid > bob_bid ? PlayerId::Alice : PlayerId::Bob;
  } else if (state.config.tie_policy.kind == TiePolicy::Kind::AdvantageMarker) {
    winner = state.advantage_holder;
    next.advantage_holder = other(winner);
  } else {
    winner = state.config.tie_policy.player;
  }
  const std::int64_t transfer = winner == PlayerId::Alice ? alice_bid : bob_bid;
  next.chips[slot(winner)] -= transfer;
  next.chips[slot(other(winner))] += transfer;
  next.phase = AwaitingMove{winner};
  next.history.push_back(BidsResolved{alice_bid, bob_bid, winner, transfer});
  return next;
}

GameState apply_move(const GameState& state, Cell cell) {
  const auto* move = std::get_if<AwaitingMove>(&state.phase);
  if (!move) wrong_phase(state, "awaiting a move");
  if (!state.position.in_bounds(cell)) {
    throw Error(ErrorCode::IllegalMove, "cell (" + std::to_string(cell.row) + "," +
                                            std::to_string(cell.col) +
                                            ") is off the board");
  }
  GameState next = state;
  next.position = state.position.with_stone(cell, color_of(move->mover));
  next.history.push_back(MovePlaced{move->mover, cell});
  switch (status(next.position)) {
    case GameStatus::Ongoing:
      next.phase = AwaitingBids{};
      break;
    case GameStatus::AmberWon:
      next.phase = Finished{PlayerId::Alice};
      next.history.push_back(GameEnded{PlayerId::Alice});
      break;
    case GameStatus::BlueWon:
      next.phase = Finished{PlayerId::Bob};
      next.history.push_back(GameEnded{PlayerId::Bob});
      break;
  }
  return next;
}

std::pair<std::int64_t, std::int64_t> legal_bid_range(const GameState& state,
                                                      PlayerId player) {
  if (!std::holds_alternative<AwaitingBids>(state.phase)) {
    wrong_phase(state, "awaiting bids");
  }
  return {0, state.chips_of(player)};
}

GameState replay(const GameConfig& config, std::span<const Event> history) {
  GameState state = new_game(config);
  for (std::size_t i = 0; i < history.size(); ++i) {
    const Event& event = history[i];
    const auto mismatch = [i] {
      return Error(ErrorCode::Restore,
                   "history event " + std::to_string(i) + " is not reproduced by the rules");
    };
    if (const auto* b = std::get_if<BidsResolved>(&event)) {
      state = submit_bid(state, PlayerId::Alice, b->alice_bid);
      state = submit_bid(state, PlayerId::Bob, b->bob_bid);
      if (state.history.back() != event) throw mismatch();
    } else if (const auto* m = std::get_if<MovePlaced>(&event)) {
      const auto* move = std::get_if<AwaitingMove>(&state.phase);
      if (!move || move->mover != m->player) throw mismatch();
      state = apply_move(state, m->cell);
      if (state.history[i] != event) throw mismatch();
    } else {
      // GameEnded is appended by apply_move itself.
      if (state.history.size() <= i || state.history[i] != event) throw mismatch();
    }
  }
  if (state.history.size() != history.size()) {
    throw Error(ErrorCode::Restore, "history ends before the game-ended event");
  }
  return state;
}

}  // namespace bidhex
