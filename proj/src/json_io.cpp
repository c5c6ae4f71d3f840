#include "bidhex/json_io.hpp"

namespace bidhex {

using nlohmann::json;

json cell_json(Cell c) { return {{"row", c.row}, {"col", c.col}}; }

Cell cell_from_json(const json& j) {
  try {
    if (j.is_array() && j.size() == 2) return {j[0].get<int>(), j[1].get<int>()};
    if (j.is_object()) return {j.at("row").get<int>(), j.at("col").get<int>()};
  } catch (const json::exception&) {
  }
  throw Error(ErrorCode::Config, "cell must be {\"row\": r, \"col\": c}");
}

namespace {

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell c : cells) out.push_back(cell_json(c));
  return out;
}

PlayerId player_field(const json& j, const char* key) {
  if (!j.is_string()) {
    throw Error(ErrorCode::Config, std::string(key) + " must be \"alice\" or \"bob\"");
  }
  auto p = parse_player(j.get<std::string>());
  if (!p) throw Error(ErrorCode::Config, std::string(key) + " must be \"alice\" or \"bob\"");
  return *p;
}

}  // namespace

json config_json(const GameConfig& config) {
  return {{"size", config.size},
          {"chips_alice", config.chips_alice},
          {"chips_bob", config.chips_bob},
          {"tie_policy",
           {{"kind", config.tie_policy.kind == TiePolicy::Kind::AdvantageMarker
                         ? "advantage_marker"
                         : "fixed_winner"},
            {"player", player_name(config.tie_policy.player)}}}};
}

GameConfig config_from_json(const json& j) {
  GameConfig config;
  if (j.is_null()) return config;
  if (!j.is_object()) throw Error(ErrorCode::Config, "config must be an object");
  try {
    config.size = j.value("size", config.size);
    config.chips_alice = j.value("chips_alice", config.chips_alice);
    config.chips_bob = j.value("chips_bob", config.chips_bob);
  } catch (const json::exception&) {
    throw Error(ErrorCode::Config, "size and chip counts must be integers");
  }
  if (j.contains("tie_policy")) {
    const json& t = j["tie_policy"];
    if (!t.is_object()) throw Error(ErrorCode::Config, "tie_policy must be an object");
    const std::string kind = t.value("kind", std::string("advantage_marker"));
    const PlayerId player =
        t.contains("player") ? player_field(t["player"], "tie_policy.player") : PlayerId::Bob;
    if (kind == "advantage_marker") {
      config.tie_policy = TiePolicy::advantage_marker(player);
    } else if (kind == "fixed_winner") {
      config.tie_policy = TiePolicy::fixed_winner(player);
    } else {
      throw Error(ErrorCode::Config, "unknown tie policy '" + kind + "'");
    }
  }
  config.validate();
  return config;
}

json event_json(const Event& e) {
  if (const auto* b = std::get_if<BidsResolved>(&e)) {
    return {{"type", "bids_resolved"},
            {"alice_bid", b->alice_bid},
            {"bob_bid", b->bob_bid},
            {"winner", player_name(b->winner)},
            {"transfer", b->transfer}};
  }
  if (const auto* m = std::get_if<MovePlaced>(&e)) {
    return {{"type", "move_placed"},
            {"player", player_name(m->player)},
            {"cell", cell_json(m->cell)}};
  }
  return {{"type", "game_ended"}, {"winner", player_name(std::get<GameEnded>(e).winner)}};
}

json advice_json(const BidAdvice& a) {
  return {{"hex", cell_json(a.hex)},
          {"bid", a.bid},
          {"losing_count", a.losing_count},
          {"trials", a.trials},
          {"l_hat", a.l_hat},
          {"criticality", a.criticality},
          {"position_status", status_name(a.position_status)}};
}

json stats_json(const CriticalityStats& stats) {
  json cells = json::array();
  for (std::size_t j = 0; j < stats.cells.size(); ++j) {
    json entry = {{"cell", cell_json(stats.cells[j])},
                  {"losing_count", stats.losing_count[j]}};
    if (!stats.not_critical_count.empty()) {
      entry["not_critical_count"] = stats.not_critical_count[j];
    }
    cells.push_back(std::move(entry));
  }
  return {{"trials", stats.trials}, {"amber_wins", stats.amber_wins}, {"cells", cells}};
}

json node_eval_json(const NodeEval& e) {
  return {{"status", status_name(e.status)},
          {"r_value", to_string(e.r_value)},
          {"r_plus", to_string(e.r_plus)},
          {"r_minus", to_string(e.r_minus)},
          {"delta", to_string(e.delta)},
          {"random_turn_value", to_string(1 - e.r_value)},
          {"alice_optimal", cells_json(e.alice_optimal)},
          {"bob_optimal", cells_json(e.bob_optimal)}};
}

json public_state_json(const GameState& state) {
  json phase;
  json winner = nullptr;
  if (const auto* b = std::get_if<AwaitingBids>(&state.phase)) {
    phase = {{"kind", "awaiting_bids"},
             {"committed",
              {{"alice", b->pending[slot(PlayerId::Alice)].has_value()},
               {"bob", b->pending[slot(PlayerId::Bob)].has_value()}}}};
  } else if (const auto* m = std::get_if<AwaitingMove>(&state.phase)) {
    phase = {{"kind", "awaiting_move"}, {"mover", player_name(m->mover)}};
  } else {
    const PlayerId w = std::get<Finished>(state.phase).winner;
    phase = {{"kind", "finished"}, {"winner", player_name(w)}};
    winner = player_name(w);
  }
  json history = json::array();
  for (const Event& e : state.history) history.push_back(event_json(e));
  return {{"size", state.config.size},
          {"position", format_position(state.position)},
          {"status", status_name(status(state.position))},
          {"chips",
           {{"alice", state.chips_of(PlayerId::Alice)}, {"bob", state.chips_of(PlayerId::Bob)}}},
          {"total_chips", state.config.total_chips()},
          {"phase", phase},
          {"advantage_holder", player_name(state.advantage_holder)},
          {"tie_policy", config_json(state.config)["tie_policy"]},
          {"history", history},
          {"winner", winner}};
}

}  // namespace bidhex
