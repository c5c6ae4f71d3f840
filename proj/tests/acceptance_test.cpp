// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <httplib.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "bidhex/agents.hpp"
#include "bidhex/game.hpp"
#include "bidhex/http_server.hpp"
#include "bidhex/json_io.hpp"
#include "bidhex/montecarlo.hpp"
#include "bidhex/richman.hpp"
#include "bidhex/session_store.hpp"
#include "bidhex/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace bidhex;
using nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++g_failures;
  std::printf("%s  %-34s %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", name.c_str(),
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome from_report(const CheckReport& r) {
  std::ostringstream os;
  os << r.checked - r.failed << "/" << r.checked << " positions exact";
  for (const auto& f : r.failures) os << "; counterexample " << f;
  return {r.ok(), os.str()};
}

std::vector<Position> with_references(std::vector<Position> sampled) {
  auto refs = empty_reference_boards();
  refs.insert(refs.end(), sampled.begin(), sampled.end());
  return refs;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = ::pclose(pipe);
  return out;
}

Outcome worked_example() {
  GameState s = new_game(GameConfig{});
  s = submit_bid(s, PlayerId::Alice, 17);
  s = submit_bid(s, PlayerId::Bob, 19);
  const auto* move = std::get_if<AwaitingMove>(&s.phase);
  const bool api_ok = s.chips[0] == 119 && s.chips[1] == 81 && move &&
                      move->mover == PlayerId::Bob;

  SessionStore store;
  HttpServer server(store);
  const int port = server.bind("127.0.0.1", 0);
  std::thread loop([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  bool http_ok = false;
  std::string http_detail = "no response";
  if (auto res = client.Post("/games", json{{"config", config_json(GameConfig{})}}.dump(),
                             "application/json");
      res && res->status == 201) {
    const std::string id = json::parse(res->body)["id"];
    client.Post("/games/" + id + "/bids", json{{"player", "alice"}, {"bid", 17}}.dump(),
                "application/json");
    auto last = client.Post("/games/" + id + "/bids", json{{"player", "bob"}, {"bid", 19}}.dump(),
                            "application/json");
    if (last && last->status == 200) {
      const json v = json::parse(last->body);
      http_ok = v["chips"]["alice"] == 119 && v["chips"]["bob"] == 81 &&
                v["phase"]["kind"] == "awaiting_move" && v["phase"]["mover"] == "bob";
      http_detail = "http chips " + v["chips"].dump();
    }
  }
  server.stop();
  loop.join();
  return {api_ok && http_ok, "api chips " + std::to_string(s.chips[0]) + "/" +
                                 std::to_string(s.chips[1]) + ", " + http_detail};
}

Outcome no_draw() {
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  auto check = [&](const Position& p) {
    const Filling f(p);
    const Color trace = winner_trace(f);
    if (trace != winner_connectivity(f) || trace != test::blue_union_find_winner(p)) ++bad;
    ++checked;
  };
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (r * c)); ++bits) {
        check(test::filling_from_bits(r, c, bits));
      }
    }
  }
  for (int n = 4; n <= 11; ++n) {
    std::mt19937_64 rng(1000 + n);
    for (int i = 0; i < 10'000; ++i) check(test::random_filling(n, n, rng));
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) +
                        " fillings with trace == connectivity == union-find"};
}

Outcome mc_convergence() {
  const Position board(3);
  const auto exact = enumerate_stats(board);
  const double fillings = static_cast<double>(std::uint64_t{1} << board.cell_count());
  int within = 0;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto s = run_trials(board, {100'000, seed, 1});
    double err = 0;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      const double truth = static_cast<double>(exact.losing(s.cells[i])) / fillings;
      err = std::max(err, std::abs(s.l_hat(s.cells[i]) - truth));
    }
    worst = std::max(worst, err);
    within += err <= 0.01;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/50 runs within 0.01 (worst %.4f)", within, worst);
  return {within >= 49, buf};
}

Outcome throughput() {
  const int workers = std::max(2u, std::thread::hardware_concurrency());
  int status = 0;
  const std::string out = run_command(std::string(BIDHEX_CLI_PATH) +
                                          " bench --size 11 --seconds 2 --seed 3 --workers " +
                                          std::to_string(workers) + " --json",
                                      status);
  if (status != 0) return {false, "bench exited with status " + std::to_string(status)};
  const json j = json::parse(out);
  double single = 0;
  std::ostringstream os;
  for (const auto& row : j["results"]) {
    const double rate = row["fillings_per_second"];
    if (row["workers"] == 1) single = rate;
    char buf[80];
    std::snprintf(buf, sizeof buf, "%sw%d=%.0f/s (x%.2f)", os.tellp() > 0 ? " " : "",
                  row["workers"].get<int>(), rate, row["speedup"].get<double>());
    os << buf;
  }
  os << ", hardware threads " << std::thread::hardware_concurrency();
  return {single >= 50'000, os.str()};
}

Outcome determinism() {
  const auto positions = sample_positions(20, 40, 99);
  int identical = 0;
  for (const auto& p : positions) {
    const TrialConfig c{5'000, 42, 3};
    identical += run_trials(p, c) == run_trials(p, c);
  }
  const std::string cmd = std::string(BIDHEX_CLI_PATH) + " advise --pos '" +
                          format_position(positions.front()) +
                          "' --trials 20000 --seed 11 --workers 2 --json";
  int s1 = 0;
  int s2 = 0;
  const std::string a = run_command(cmd, s1);
  const std::string b = run_command(cmd, s2);
  const bool cli_ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  return {identical == static_cast<int>(positions.size()) && cli_ok,
          std::to_string(identical) + "/" + std::to_string(positions.size()) +
              " stats identical, CLI json " + (cli_ok ? "byte-identical" : "differs")};
}

// Advisor plays Alice and holds the advantage marker from even chips.
int advisor_wins(int size, int games, const AdvisorAgent::Options& base, std::uint64_t seed) {
  GameConfig config;
  config.size = size;
  config.tie_policy = TiePolicy::advantage_marker(PlayerId::Alice);
  int wins = 0;
  for (int g = 0; g < games; ++g) {
    AdvisorAgent::Options o = base;
    o.seed = derive_seed(seed, 2 * g);
    AdvisorAgent alice(o);
    RandomAgent bob(derive_seed(seed, 2 * g + 1));
    const auto result = play_game(config, alice, bob);
    wins += std::get<Finished>(result.final_state.phase).winner == PlayerId::Alice;
  }
  return wins;
}

Outcome selfplay() {
  AdvisorAgent::Options exact;
  exact.exact = true;
  const int small = advisor_wins(3, 200, exact, 5);
  AdvisorAgent::Options sampled;
  sampled.trials = 20'000;
  const int large = advisor_wins(5, 200, sampled, 6);
  return {small >= 198 && large >= 190, "3x3 exact advisor " + std::to_string(small) +
                                            "/200, 5x5 sampled advisor " +
                                            std::to_string(large) + "/200 vs random bidder"};
}

}  // namespace

int main() {
  RichmanSolver solver(12);
  const auto small = with_references(sample_positions(200, 8, 2024));

  criterion("losing-colour identity", [] {
    return from_report(
        check_losing_color_identity(with_references(sample_positions(200, 12, 2023))));
  });
  criterion("richman/filling agreement",
            [&] { return from_report(check_richman_filling_agreement(small, solver)); });
  criterion("optimal bid and move agreement",
            [&] { return from_report(check_optimal_bid_agreement(small, solver)); });
  criterion("worked example (api + http)", worked_example);
  criterion("no draw, winner algorithms agree", no_draw);
  criterion("monte carlo convergence 3x3", mc_convergence);
  criterion("throughput 11x11 single worker", throughput);
  criterion("determinism", determinism);
  criterion("self-play vs random bidder", selfplay);

  std::printf("%s: %d failing criteria\n", g_failures ? "FAILED" : "OK", g_failures);
  return g_failures ? 1 : 0;
}
