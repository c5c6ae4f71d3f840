#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "bidhex/agents.hpp"
#include "bidhex/game.hpp"
#include "bidhex/montecarlo.hpp"
#include "bidhex/snapshot.hpp"

namespace bidhex {

struct ServiceConfig {
  std::uint64_t default_trial_budget = 300'000;
  int workers = 1;
  // When set, every session is written here after each change and reloaded
  // by load_snapshots().
  std::optional<std::filesystem::path> snapshot_dir;
};

struct SessionRequest {
  GameConfig config;
  std::optional<PlayerId> ai_player;
  std::optional<std::uint64_t> trial_budget;
  // Fixes the AI's per-decision seeds for reproducible games.
  std::optional<std::uint64_t> seed;
};

// In-memory game sessions. Operations on one session are serialized by that
// session's mutex; the AI for a session thinks while holding only that mutex.
class SessionStore {
 public:
  explicit SessionStore(ServiceConfig config = {});

  // Returns the new session id. The AI, if any, seals its first bid before
  // this returns.
  std::string create(const SessionRequest& request);

  nlohmann::json view(const std::string& id) const;
  nlohmann::json post_bid(const std::string& id, PlayerId player, std::int64_t bid);
  nlohmann::json post_move(const std::string& id, PlayerId player, Cell cell);
  BidAdvice advice(const std::string& id, PlayerId player) const;

  // Redact is what clients get; Include is used for the snapshot directory.
  std::string snapshot(const std::string& id, PendingBids bids = PendingBids::Redact) const;
  // Restores under the id stored in the document. Redacted AI bids are
  // recomputed; redacted human bids are dropped and must be resubmitted.
  std::string restore(std::string_view document);

  // Restores every *.snapshot file in the snapshot directory. Returns the
  // number loaded.
  int load_snapshots();

  std::vector<std::string> ids() const;
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Session {
    mutable std::mutex mu;
    std::string id;
    GameState state;
    std::optional<PlayerId> ai_player;
    std::uint64_t trial_budget = 0;
    std::optional<std::uint64_t> seed;
    std::unique_ptr<AdvisorAgent> ai;
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;

    explicit Session(GameState s) : state(std::move(s)) {}
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  void insert(const std::shared_ptr<Session>& session);
  void attach_ai(Session& s) const;
  void run_ai(Session& s) const;
  void touch_and_persist(Session& s) const;
  void persist(const Session& s) const;
  std::string format_session(const Session& s, PendingBids bids) const;
  static nlohmann::json session_view(const Session& s);

  ServiceConfig config_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace bidhex
