#pragma once

#include <json.hpp>

#include "bidhex/game.hpp"
#include "bidhex/montecarlo.hpp"
#include "bidhex/richman.hpp"

namespace bidhex {

nlohmann::json cell_json(Cell c);
// Accepts {"row": r, "col": c} or [r, c]. Throws Error(Config).
Cell cell_from_json(const nlohmann::json& j);

nlohmann::json config_json(const GameConfig& config);
// Missing fields take GameConfig defaults. Throws Error(Config).
GameConfig config_from_json(const nlohmann::json& j);

nlohmann::json event_json(const Event& e);
nlohmann::json advice_json(const BidAdvice& advice);
nlohmann::json stats_json(const CriticalityStats& stats);
nlohmann::json node_eval_json(const NodeEval& eval);

// Everything a client may see. Pending bids appear only as `committed`
// flags, never as amounts.
nlohmann::json public_state_json(const GameState& state);

}  // namespace bidhex
