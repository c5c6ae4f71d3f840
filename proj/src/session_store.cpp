#include "bidhex/session_store.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "bidhex/json_io.hpp"
#include "bidhex/rng.hpp"

namespace bidhex {

namespace {

std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string fresh_id() {
  static std::mutex mu;
  static std::random_device device;
  std::lock_guard lock(mu);
  const std::uint64_t hi = (std::uint64_t{device()} << 32) ^ device();
  const std::uint64_t lo = (std::uint64_t{device()} << 32) ^ device();
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

bool valid_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                    (c >= 'A' && c <= 'Z') || c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::optional<std::uint64_t> optional_u64(const DocLine& line) {
  if (line.value == "none") return std::nullopt;
  std::uint64_t v = 0;
  const char* end = line.value.data() + line.value.size();
  auto [ptr, ec] = std::from_chars(line.value.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::Restore, "field '" + line.key + "' (line " +
                                        std::to_string(line.line) +
                                        "): expected an unsigned integer or none");
  }
  return v;
}

const DocLine& expect(const std::vector<DocLine>& lines, std::size_t& cursor,
                      std::string_view key) {
  if (cursor >= lines.size()) {
    throw Error(ErrorCode::Restore, "field '" + std::string(key) + "': document ends early");
  }
  const DocLine& line = lines[cursor];
  if (line.key != key) {
    throw Error(ErrorCode::Restore, "field '" + std::string(key) + "' (line " +
                                        std::to_string(line.line) + "): found '" +
                                        line.key + "' instead");
  }
  ++cursor;
  return line;
}

}  // namespace

SessionStore::SessionStore(ServiceConfig config) : config_(std::move(config)) {
  if (config_.default_trial_budget < 1) {
    throw Error(ErrorCode::Config, "default trial budget must be at least 1");
  }
  if (config_.workers < 1) throw Error(ErrorCode::Config, "workers must be at least 1");
  if (config_.snapshot_dir) std::filesystem::create_directories(*config_.snapshot_dir);
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "no game with id '" + id + "'");
  return it->second;
}

void SessionStore::insert(const std::shared_ptr<Session>& session) {
  std::unique_lock lock(mu_);
  if (!sessions_.emplace(session->id, session).second) {
    throw Error(ErrorCode::Conflict, "a game with id '" + session->id + "' already exists");
  }
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, s] : sessions_) out.push_back(id);
  return out;
}

void SessionStore::attach_ai(Session& s) const {
  if (!s.ai_player) return;
  AdvisorAgent::Options options;
  options.trials = s.trial_budget;
  options.seed = s.seed;
  options.workers = config_.workers;
  s.ai = std::make_unique<AdvisorAgent>(options);
}

// Lets the AI act until the next decision belongs to a human.
void SessionStore::run_ai(Session& s) const {
  if (!s.ai_player) return;
  const PlayerId ai = *s.ai_player;
  while (!s.state.finished()) {
    if (std::holds_alternative<AwaitingBids>(s.state.phase)) {
      if (s.state.has_pending_bid(ai)) return;
      s.state = submit_bid(s.state, ai, s.ai->choose_bid(s.state, ai));
    } else if (std::get<AwaitingMove>(s.state.phase).mover == ai) {
      s.state = apply_move(s.state, s.ai->choose_move(s.state, ai));
    } else {
      return;
    }
  }
}

nlohmann::json SessionStore::session_view(const Session& s) {
  nlohmann::json view = public_state_json(s.state);
  view["id"] = s.id;
  view["ai_player"] = s.ai_player ? nlohmann::json(player_name(*s.ai_player)) : nullptr;
  view["trial_budget"] = s.trial_budget;
  view["created_ms"] = s.created_ms;
  view["updated_ms"] = s.updated_ms;
  return view;
}

std::string SessionStore::format_session(const Session& s, PendingBids bids) const {
  std::ostringstream out;
  out << format_game(s.state, bids);
  out << "session.id: " << s.id << '\n';
  out << "session.ai_player: " << (s.ai_player ? player_name(*s.ai_player) : "none") << '\n';
  out << "session.trial_budget: " << s.trial_budget << '\n';
  out << "session.seed: " << (s.seed ? std::to_string(*s.seed) : "none") << '\n';
  out << "session.created_ms: " << s.created_ms << '\n';
  out << "session.updated_ms: " << s.updated_ms << '\n';
  out << "end: session\n";
  return out.str();
}

void SessionStore::touch_and_persist(Session& s) const {
  s.updated_ms = now_ms();
  persist(s);
}

void SessionStore::persist(const Session& s) const {
  if (!config_.snapshot_dir) return;
  const auto path = *config_.snapshot_dir / (s.id + ".snapshot");
  const auto tmp = *config_.snapshot_dir / (s.id + ".snapshot.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << format_session(s, PendingBids::Include);
  }
  std::filesystem::rename(tmp, path);
}

std::string SessionStore::create(const SessionRequest& request) {
  request.config.validate();
  if (request.trial_budget && *request.trial_budget < 1) {
    throw Error(ErrorCode::Config, "trial budget must be at least 1");
  }
  auto s = std::make_shared<Session>(new_game(request.config));
  s->id = fresh_id();
  s->ai_player = request.ai_player;
  s->trial_budget = request.trial_budget.value_or(config_.default_trial_budget);
  s->seed = request.seed;
  s->created_ms = now_ms();
  attach_ai(*s);
  std::lock_guard lock(s->mu);
  run_ai(*s);
  touch_and_persist(*s);
  insert(s);
  return s->id;
}

nlohmann::json SessionStore::view(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return session_view(*s);
}

nlohmann::json SessionStore::post_bid(const std::string& id, PlayerId player,
                                      std::int64_t bid) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  if (s->ai_player == player) {
    throw Error(ErrorCode::Forbidden,
                std::string(player_name(player)) + " is played by the AI");
  }
  s->state = submit_bid(s->state, player, bid);
  run_ai(*s);
  touch_and_persist(*s);
  return session_view(*s);
}

nlohmann::json SessionStore::post_move(const std::string& id, PlayerId player, Cell cell) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  if (s->ai_player == player) {
    throw Error(ErrorCode::Forbidden,
                std::string(player_name(player)) + " is played by the AI");
  }
  const auto* move = std::get_if<AwaitingMove>(&s->state.phase);
  if (move && move->mover != player) {
    throw Error(ErrorCode::Phase, std::string("it is ") + player_name(move->mover) +
                                      "'s move, not " + player_name(player) + "'s");
  }
  s->state = apply_move(s->state, cell);
  run_ai(*s);
  touch_and_persist(*s);
  return session_view(*s);
}

BidAdvice SessionStore::advice(const std::string& id, PlayerId player) const {
  auto s = find(id);
  GameState state = [&] {
    std::lock_guard lock(s->mu);
    if (s->ai_player == player) {
      throw Error(ErrorCode::Forbidden, "advice is only offered to human players");
    }
    return s->state;
  }();
  std::uint64_t budget = s->trial_budget;
  std::optional<std::uint64_t> seed = s->seed;
  if (state.finished()) throw Error(ErrorCode::GameOver, "the game is over");
  if (!std::holds_alternative<AwaitingBids>(state.phase)) {
    throw Error(ErrorCode::Phase, "advice is available while bids are open");
  }
  std::uint64_t trial_seed;
  if (seed) {
    trial_seed = derive_seed(*seed ^ 0xadu, state.history.size() * 2 + slot(player));
  } else {
    std::random_device device;
    trial_seed = (std::uint64_t{device()} << 32) ^ device();
  }
  // The statistics are computed outside the session lock.
  const CriticalityStats stats =
      run_trials(state.position, {budget, trial_seed, config_.workers});
  return bidhex::advise(state.position, stats, state.config.total_chips(),
                        state.chips_of(player));
}

std::string SessionStore::snapshot(const std::string& id, PendingBids bids) const {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return format_session(*s, bids);
}

std::string SessionStore::restore(std::string_view document) {
  const auto lines = split_document(document);
  std::size_t cursor = 0;
  RestoredGame game = parse_game(lines, cursor);

  auto s = std::make_shared<Session>(std::move(game.state));
  const DocLine& id = expect(lines, cursor, "session.id");
  if (!valid_id(id.value)) {
    throw Error(ErrorCode::Restore, "field 'session.id' (line " + std::to_string(id.line) +
                                        "): malformed id");
  }
  s->id = id.value;
  const DocLine& ai = expect(lines, cursor, "session.ai_player");
  if (ai.value != "none") {
    s->ai_player = parse_player(ai.value);
    if (!s->ai_player) {
      throw Error(ErrorCode::Restore, "field 'session.ai_player' (line " +
                                          std::to_string(ai.line) + "): expected alice, bob or none");
    }
  }
  const DocLine& budget = expect(lines, cursor, "session.trial_budget");
  const auto trial_budget = optional_u64(budget);
  if (!trial_budget || *trial_budget < 1) {
    throw Error(ErrorCode::Restore, "field 'session.trial_budget' (line " +
                                        std::to_string(budget.line) + "): must be at least 1");
  }
  s->trial_budget = *trial_budget;
  s->seed = optional_u64(expect(lines, cursor, "session.seed"));
  const auto created = optional_u64(expect(lines, cursor, "session.created_ms"));
  const auto updated = optional_u64(expect(lines, cursor, "session.updated_ms"));
  s->created_ms = static_cast<std::int64_t>(created.value_or(0));
  s->updated_ms = static_cast<std::int64_t>(updated.value_or(0));
  const DocLine& end = expect(lines, cursor, "end");
  if (end.value != "session" || cursor != lines.size()) {
    throw Error(ErrorCode::Restore, "field 'end' (line " + std::to_string(end.line) +
                                        "): expected the document to end after 'end: session'");
  }

  attach_ai(*s);
  std::lock_guard lock(s->mu);
  run_ai(*s);
  insert(s);
  persist(*s);
  return s->id;
}

int SessionStore::load_snapshots() {
  if (!config_.snapshot_dir) return 0;
  int loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*config_.snapshot_dir)) {
    if (entry.path().extension() != ".snapshot") continue;
    std::ifstream in(entry.path());
    std::stringstream buffer;
    buffer << in.rdbuf();
    restore(buffer.str());
    ++loaded;
  }
  return loaded;
}

}  // namespace bidhex
