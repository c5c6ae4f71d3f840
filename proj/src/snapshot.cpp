#include "bidhex/snapshot.hpp"

#include <charconv>
#include <sstream>

namespace bidhex {

namespace {

constexpr std::string_view kFormat = "bidhex-game/1";

std::string describe_bid(const std::optional<std::int64_t>& bid, PendingBids mode) {
  if (!bid) return "-";
  if (mode == PendingBids::Redact) return "sealed";
  return std::to_string(*bid);
}

[[noreturn]] void bad_field(const DocLine& line, const std::string& why) {
  throw Error(ErrorCode::Restore, "field '" + line.key + "' (line " +
                                      std::to_string(line.line) + "): " + why);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::int64_t int_word(const DocLine& line, const std::string& w) {
  std::int64_t v;
  if (!parse_int(w, v)) bad_field(line, "expected an integer, got '" + w + "'");
  return v;
}

PlayerId player_word(const DocLine& line, const std::string& w) {
  auto p = parse_player(w);
  if (!p) bad_field(line, "expected alice or bob, got '" + w + "'");
  return *p;
}

class Reader {
 public:
  Reader(const std::vector<DocLine>& lines, std::size_t& cursor)
      : lines_(lines), cursor_(cursor) {}

  const DocLine& expect(std::string_view key) {
    if (cursor_ >= lines_.size()) {
      throw Error(ErrorCode::Restore,
                  "field '" + std::string(key) + "': document ends early");
    }
    const DocLine& line = lines_[cursor_];
    if (line.key != key) {
      throw Error(ErrorCode::Restore,
                  "field '" + std::string(key) + "' (line " +
                      std::to_string(line.line) + "): found '" + line.key +
                      "' instead");
    }
    ++cursor_;
    return line;
  }

 private:
  const std::vector<DocLine>& lines_;
  std::size_t& cursor_;
};

Event parse_event(const DocLine& line) {
  const auto w = words(line.value);
  if (!w.empty() && w[0] == "bids" && w.size() == 5) {
    return BidsResolved{int_word(line, w[1]), int_word(line, w[2]),
                        player_word(line, w[3]), int_word(line, w[4])};
  }
  if (!w.empty() && w[0] == "move" && w.size() == 4) {
    return MovePlaced{player_word(line, w[1]),
                      Cell{static_cast<int>(int_word(line, w[2])),
                           static_cast<int>(int_word(line, w[3]))}};
  }
  if (!w.empty() && w[0] == "end" && w.size() == 2) {
    return GameEnded{player_word(line, w[1])};
  }
  bad_field(line, "unrecognised event '" + line.value + "'");
}

}  // namespace

std::vector<DocLine> split_document(std::string_view text) {
  std::vector<DocLine> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (raw.empty() || raw.front() == '#') continue;
    const auto sep = raw.find(": ");
    if (sep == std::string_view::npos || sep == 0) {
      throw Error(ErrorCode::Restore,
                  "line " + std::to_string(number) + ": expected 'key: value'");
    }
    out.push_back({number, std::string(raw.substr(0, sep)),
                   std::string(raw.substr(sep + 2))});
  }
  return out;
}

std::string format_game(const GameState& state, PendingBids bids) {
  std::ostringstream out;
  const GameConfig& cfg = state.config;
  out << "format: " << kFormat << '\n';
  out << "size: " << cfg.size << '\n';
  out << "initial_chips: " << cfg.chips_alice << ' ' << cfg.chips_bob << '\n';
  out << "tie_policy: "
      << (cfg.tie_policy.kind == TiePolicy::Kind::AdvantageMarker ? "advantage_marker"
                                                                  : "fixed_winner")
      << ' ' << player_name(cfg.tie_policy.player) << '\n';
  out << "position: " << format_position(state.position) << '\n';
  out << "chips: " << state.chips[0] << ' ' << state.chips[1] << '\n';
  out << "advantage: " << player_name(state.advantage_holder) << '\n';
  out << "phase: ";
  if (const auto* b = std::get_if<AwaitingBids>(&state.phase)) {
    out << "awaiting_bids alice=" << describe_bid(b->pending[0], bids)
        << " bob=" << describe_bid(b->pending[1], bids);
  } else if (const auto* m = std::get_if<AwaitingMove>(&state.phase)) {
    out << "awaiting_move " << player_name(m->mover);
  } else {
    out << "finished " << player_name(std::get<Finished>(state.phase).winner);
  }
  out << '\n';
  out << "events: " << state.history.size() << '\n';
  for (const Event& e : state.history) {
    out << "event: ";
    if (const auto* b = std::get_if<BidsResolved>(&e)) {
      out << "bids " << b->alice_bid << ' ' << b->bob_bid << ' '
          << player_name(b->winner) << ' ' << b->transfer;
    } else if (const auto* m = std::get_if<MovePlaced>(&e)) {
      out << "move " << player_name(m->player) << ' ' << m->cell.row << ' '
          << m->cell.col;
    } else {
      out << "end " << player_name(std::get<GameEnded>(e).winner);
    }
    out << '\n';
  }
  out << "end: game\n";
  return out.str();
}

RestoredGame parse_game(const std::vector<DocLine>& lines, std::size_t& cursor) {
  Reader in(lines, cursor);

  const DocLine& format = in.expect("format");
  if (format.value != kFormat) bad_field(format, "unsupported format '" + format.value + "'");

  GameConfig cfg;
  const DocLine& size = in.expect("size");
  cfg.size = static_cast<int>(int_word(size, size.value));

  const DocLine& initial = in.expect("initial_chips");
  auto w = words(initial.value);
  if (w.size() != 2) bad_field(initial, "expected two chip counts");
  cfg.chips_alice = int_word(initial, w[0]);
  cfg.chips_bob = int_word(initial, w[1]);

  const DocLine& tie = in.expect("tie_policy");
  w = words(tie.value);
  if (w.size() != 2) bad_field(tie, "expected '<kind> <player>'");
  if (w[0] == "advantage_marker") {
    cfg.tie_policy = TiePolicy::advantage_marker(player_word(tie, w[1]));
  } else if (w[0] == "fixed_winner") {
    cfg.tie_policy = TiePolicy::fixed_winner(player_word(tie, w[1]));
  } else {
    bad_field(tie, "unknown tie policy '" + w[0] + "'");
  }
  try {
    cfg.validate();
  } catch (const Error& e) {
    bad_field(initial, e.what());
  }

  const DocLine& pos_line = in.expect("position");
  Position position(1);
  try {
    position = parse_position(pos_line.value);
  } catch (const Error& e) {
    bad_field(pos_line, e.what());
  }

  const DocLine& chips_line = in.expect("chips");
  w = words(chips_line.value);
  if (w.size() != 2) bad_field(chips_line, "expected two chip counts");
  const std::array<std::int64_t, 2> chips{int_word(chips_line, w[0]),
                                          int_word(chips_line, w[1])};

  const DocLine& adv_line = in.expect("advantage");
  const PlayerId advantage = player_word(adv_line, adv_line.value);

  const DocLine& phase_line = in.expect("phase");
  w = words(phase_line.value);
  Phase phase;
  std::array<bool, 2> redacted{};
  if (w.size() == 3 && w[0] == "awaiting_bids") {
    AwaitingBids bids;
    const std::array<std::string_view, 2> prefixes{"alice=", "bob="};
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string& item = w[i + 1];
      if (!item.starts_with(prefixes[i])) bad_field(phase_line, "malformed bid '" + item + "'");
      const std::string v = item.substr(prefixes[i].size());
      if (v == "sealed") {
        redacted[i] = true;
      } else if (v != "-") {
        bids.pending[i] = int_word(phase_line, v);
      }
    }
    phase = bids;
  } else if (w.size() == 2 && w[0] == "awaiting_move") {
    phase = AwaitingMove{player_word(phase_line, w[1])};
  } else if (w.size() == 2 && w[0] == "finished") {
    phase = Finished{player_word(phase_line, w[1])};
  } else {
    bad_field(phase_line, "unrecognised phase '" + phase_line.value + "'");
  }

  const DocLine& count_line = in.expect("events");
  const std::int64_t count = int_word(count_line, count_line.value);
  if (count < 0) bad_field(count_line, "negative event count");
  std::vector<Event> history;
  for (std::int64_t i = 0; i < count; ++i) {
    history.push_back(parse_event(in.expect("event")));
  }
  const DocLine& end = in.expect("end");
  if (end.value != "game") bad_field(end, "expected 'game'");

  GameState state = new_game(cfg);
  try {
    state = replay(cfg, history);
  } catch (const Error& e) {
    bad_field(count_line, std::string("history does not replay: ") + e.what());
  }
  if (state.position != position) bad_field(pos_line, "does not match the replayed history");
  if (state.chips != chips) bad_field(chips_line, "does not match the replayed history");
  if (state.advantage_holder != advantage) {
    bad_field(adv_line, "does not match the replayed history");
  }
  if (const auto* bids = std::get_if<AwaitingBids>(&phase)) {
    if (!std::holds_alternative<AwaitingBids>(state.phase)) {
      bad_field(phase_line, "does not match the replayed history");
    }
    const int sealed = bids->pending[0].has_value() + bids->pending[1].has_value() +
                       redacted[0] + redacted[1];
    if (sealed > 1) bad_field(phase_line, "both bids present but unresolved");
    try {
      for (PlayerId p : {PlayerId::Alice, PlayerId::Bob}) {
        if (bids->pending[slot(p)]) state = submit_bid(state, p, *bids->pending[slot(p)]);
      }
    } catch (const Error& e) {
      bad_field(phase_line, e.what());
    }
  } else if (state.phase != phase) {
    bad_field(phase_line, "does not match the replayed history");
  }
  return {std::move(state), redacted};
}

RestoredGame parse_game(std::string_view text) {
  const auto lines = split_document(text);
  std::size_t cursor = 0;
  RestoredGame out = parse_game(lines, cursor);
  if (cursor != lines.size()) {
    bad_field(lines[cursor], "unexpected content after the game section");
  }
  return out;
}

}  // namespace bidhex
