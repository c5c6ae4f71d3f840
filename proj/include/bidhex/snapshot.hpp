#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bidhex/game.hpp"

namespace bidhex {

// Line-oriented `key: value` documents.
//
//   format: bidhex-game/1
//   size: 11
//   initial_chips: 100 100
//   tie_policy: advantage_marker bob
//   position: 11:.........../...
//   chips: 119 81
//   advantage: bob
//   phase: awaiting_bids alice=- bob=19
//   events: 1
//   event: bids 17 19 bob 19
//   end: game
//
// `phase` is one of `awaiting_bids alice=<b> bob=<b>` (b is `-` for no bid,
// an integer, or `sealed` when redacted), `awaiting_move <player>` or
// `finished <player>`. Events are `bids <alice> <bob> <winner> <transfer>`,
// `move <player> <row> <col>` and `end <winner>`.
struct DocLine {
  int line = 0;
  std::string key;
  std::string value;
};

// Throws Error(Restore) on lines without a `key: ` separator.
std::vector<DocLine> split_document(std::string_view text);

enum class PendingBids { Include, Redact };

std::string format_game(const GameState& state, PendingBids bids = PendingBids::Include);

struct RestoredGame {
  GameState state;
  // Players whose sealed bid was present but redacted; the restored state
  // holds no bid for them.
  std::array<bool, 2> redacted{};
};

// Parses a game section starting at lines[cursor] and advances `cursor` past
// its `end: game` line. The history is replayed and must reproduce the stored
// position, chips, advantage holder and phase. Errors are Error(Restore)
// naming the first bad field.
RestoredGame parse_game(const std::vector<DocLine>& lines, std::size_t& cursor);
RestoredGame parse_game(std::string_view text);

}  // namespace bidhex
