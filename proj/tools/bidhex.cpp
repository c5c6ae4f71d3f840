// Command-line entry point: advise, exact, verify, bench, selfplay, serve.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "bidhex/agents.hpp"
#include "bidhex/http_server.hpp"
#include "bidhex/json_io.hpp"
#include "bidhex/montecarlo.hpp"
#include "bidhex/richman.hpp"
#include "bidhex/verify.hpp"

namespace {

using bidhex::Cell;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += cell_text(cells[i]);
  }
  return out + "}";
}

struct AdviseArgs {
  std::string pos;
  std::int64_t total = 200;
  std::int64_t own = 100;
  std::uint64_t trials = 300'000;
  std::uint64_t seed = 0;
  int workers = 1;
};

int run_advise(const AdviseArgs& a, bool as_json) {
  const bidhex::Position position = bidhex::parse_position(a.pos);
  const auto stats = bidhex::run_trials(position, {a.trials, a.seed, a.workers});
  const auto advice = bidhex::advise(position, stats, a.total, a.own);
  if (as_json) {
    json out = bidhex::advice_json(advice);
    out["position"] = bidhex::format_position(position);
    out["total_chips"] = a.total;
    out["own_chips"] = a.own;
    out["seed"] = a.seed;
    out["workers"] = a.workers;
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::cout << "position     " << bidhex::format_position(position) << '\n'
            << "status       " << bidhex::status_name(advice.position_status) << '\n'
            << "hex          " << cell_text(advice.hex) << '\n'
            << "bid          " << advice.bid << " of " << a.own << " (total " << a.total
            << ")\n"
            << "l_hat        " << advice.l_hat << " (" << advice.losing_count << "/"
            << advice.trials << ")\n"
            << "criticality  " << advice.criticality << '\n';
  return kExitOk;
}

int run_exact(const std::string& pos, int cap, bool as_json) {
  const bidhex::Position position = bidhex::parse_position(pos);
  bidhex::RichmanSolver solver(cap);
  const auto eval = solver.eval(position);
  if (as_json) {
    json out = bidhex::node_eval_json(eval);
    out["position"] = bidhex::format_position(position);
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::cout << "position           " << bidhex::format_position(position) << '\n'
            << "status             " << bidhex::status_name(eval.status) << '\n'
            << "r_value            " << bidhex::to_string(eval.r_value) << '\n'
            << "r_plus             " << bidhex::to_string(eval.r_plus) << '\n'
            << "r_minus            " << bidhex::to_string(eval.r_minus) << '\n'
            << "delta              " << bidhex::to_string(eval.delta) << '\n'
            << "random_turn_value  " << bidhex::to_string(1 - eval.r_value) << '\n'
            << "alice_optimal      " << cells_text(eval.alice_optimal) << '\n'
            << "bob_optimal        " << cells_text(eval.bob_optimal) << '\n';
  return kExitOk;
}

int run_verify(const bidhex::VerifyOptions& options, bool as_json) {
  const auto reports = bidhex::run_verification(options);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.ok(); });
  if (as_json) {
    json checks = json::array();
    for (const auto& r : reports) {
      checks.push_back({{"name", r.name},
                        {"checked", r.checked},
                        {"failed", r.failed},
                        {"failures", r.failures},
                        {"ok", r.ok()}});
    }
    std::cout << json{{"max_empty", options.max_empty},
                      {"seed", options.seed},
                      {"checks", checks},
                      {"ok", ok}}
                     .dump()
              << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checked - r.failed
                << "/" << r.checked << " positions hold exactly\n";
      for (const auto& f : r.failures) std::cout << "  counterexample " << f << '\n';
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// Fillings per second over `seconds` using the same run_trials path as
// advise, in batches.
double measure_rate(const bidhex::Position& board, int workers, double seconds,
                    std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  constexpr std::uint64_t kBatch = 20'000;
  std::uint64_t done = 0;
  std::uint64_t batch = 0;
  const auto start = clock::now();
  double elapsed = 0;
  do {
    bidhex::run_trials(board, {kBatch, bidhex::derive_seed(seed, batch++), workers});
    done += kBatch;
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  } while (elapsed < seconds);
  return static_cast<double>(done) / elapsed;
}

int run_bench(int size, int seconds, int max_workers, std::uint64_t seed, bool as_json) {
  const bidhex::Position board(size);
  std::vector<int> counts{1};
  for (int w = 2; w < max_workers; w *= 2) counts.push_back(w);
  if (max_workers > 1) counts.push_back(max_workers);
  json rows = json::array();
  double single = 0;
  for (int w : counts) {
    const double rate = measure_rate(board, w, seconds, seed);
    if (w == 1) single = rate;
    rows.push_back({{"workers", w}, {"fillings_per_second", rate}, {"speedup", rate / single}});
    if (!as_json) {
      std::cout << "workers " << w << ": " << static_cast<std::int64_t>(rate)
                << " fillings/s (x" << rate / single << ")\n";
    }
  }
  if (as_json) {
    std::cout << json{{"size", size}, {"seconds", seconds}, {"results", rows}}.dump() << '\n';
  }
  return kExitOk;
}

struct SelfPlayArgs {
  int size = 5;
  std::int64_t total = 200;
  std::uint64_t trials = 20'000;
  std::uint64_t seed = 0;
  int workers = 1;
  int games = 1;
  std::string opponent = "advisor";
};

int run_selfplay(const SelfPlayArgs& a, bool as_json) {
  bidhex::GameConfig config;
  config.size = a.size;
  config.chips_alice = a.total / 2;
  config.chips_bob = a.total - a.total / 2;
  config.validate();

  json games = json::array();
  int alice_wins = 0;
  for (int g = 0; g < a.games; ++g) {
    bidhex::AdvisorAgent::Options options;
    options.trials = a.trials;
    options.seed = bidhex::derive_seed(a.seed, 2 * g);
    options.workers = a.workers;
    bidhex::AdvisorAgent alice(options);
    std::unique_ptr<bidhex::Agent> bob;
    if (a.opponent == "random") {
      bob = std::make_unique<bidhex::RandomAgent>(bidhex::derive_seed(a.seed, 2 * g + 1));
    } else {
      options.seed = bidhex::derive_seed(a.seed, 2 * g + 1);
      bob = std::make_unique<bidhex::AdvisorAgent>(options);
    }
    const auto result = bidhex::play_game(config, alice, *bob);
    const auto winner = std::get<bidhex::Finished>(result.final_state.phase).winner;
    alice_wins += winner == bidhex::PlayerId::Alice;
    json events = json::array();
    for (const auto& e : result.final_state.history) events.push_back(bidhex::event_json(e));
    if (as_json) {
      games.push_back({{"game", g},
                       {"winner", bidhex::player_name(winner)},
                       {"rounds", result.rounds},
                       {"position", bidhex::format_position(result.final_state.position)},
                       {"events", events}});
      continue;
    }
    std::cout << "game " << g << '\n';
    for (const auto& e : events) std::cout << "  " << e.dump() << '\n';
    std::cout << "  final " << bidhex::format_position(result.final_state.position)
              << " winner " << bidhex::player_name(winner) << " after " << result.rounds
              << " rounds\n";
  }
  if (as_json) {
    std::cout << json{{"opponent", a.opponent}, {"alice_wins", alice_wins}, {"games", games}}.dump()
              << '\n';
  } else {
    std::cout << "alice (advisor) won " << alice_wins << "/" << a.games << " against "
              << a.opponent << '\n';
  }
  return kExitOk;
}

bidhex::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const std::string& host, int port, const std::string& snapshot_dir,
              std::uint64_t budget, int workers) {
  bidhex::ServiceConfig config;
  config.default_trial_budget = budget;
  config.workers = workers;
  if (!snapshot_dir.empty()) config.snapshot_dir = snapshot_dir;
  bidhex::SessionStore store(config);
  const int loaded = store.load_snapshots();
  bidhex::HttpServer server(store);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "error: cannot listen on " << host << ":" << port << '\n';
    return kExitFailed;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on http://" << host << ":" << bound << " (" << loaded
            << " games restored)" << std::endl;
  server.listen();
  g_server = nullptr;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bidding Hex advisor, exact solver and game server"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  AdviseArgs advise_args;
  auto* advise = app.add_subcommand("advise", "Suggest a hex and a bid for a position");
  advise->add_option("--pos", advise_args.pos, "Position, e.g. 3:.../.A./...")->required();
  advise->add_option("--total", advise_args.total, "Total chips in the game")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max() / 4));
  advise->add_option("--own", advise_args.own, "Chips held by the bidder")
      ->check(CLI::NonNegativeNumber);
  advise->add_option("--trials", advise_args.trials, "Random fillings")
      ->check(CLI::PositiveNumber);
  advise->add_option("--seed", advise_args.seed, "Random seed");
  advise->add_option("--workers", advise_args.workers, "Worker threads")
      ->check(CLI::Range(1, 256));
  advise->add_flag("--json", as_json, "Machine-readable output");

  std::string exact_pos;
  int exact_cap = bidhex::RichmanSolver::kDefaultEmptyCap;
  auto* exact = app.add_subcommand("exact", "Exact Richman values for a small position");
  exact->add_option("--pos", exact_pos, "Position")->required();
  exact->add_option("--max-empty", exact_cap, "Refuse positions with more empty cells")
      ->check(CLI::Range(0, 20));
  exact->add_flag("--json", as_json, "Machine-readable output");

  bidhex::VerifyOptions verify_options;
  auto* verify = app.add_subcommand(
      "verify", "Check the exact identities on reference boards and random positions");
  verify->add_option("--max-empty", verify_options.max_empty, "Largest empty-cell count")
      ->check(CLI::Range(1, bidhex::kEnumerationCap));
  verify->add_option("--seed", verify_options.seed, "Seed for the random positions");
  verify->add_flag("--json", as_json, "Machine-readable output");

  int bench_size = 11;
  int bench_seconds = 2;
  int bench_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Measure fillings per second");
  bench->add_option("--size", bench_size, "Board side")->check(CLI::Range(1, bidhex::kMaxBoardSize));
  bench->add_option("--seconds", bench_seconds, "Seconds per worker count")
      ->check(CLI::Range(1, 3600));
  bench->add_option("--workers", bench_workers, "Largest worker count")->check(CLI::Range(1, 256));
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_flag("--json", as_json, "Machine-readable output");

  SelfPlayArgs selfplay_args;
  auto* selfplay = app.add_subcommand("selfplay", "Advisor (Alice) against an opponent");
  selfplay->add_option("--size", selfplay_args.size, "Board side")
      ->check(CLI::Range(1, bidhex::kMaxBoardSize));
  selfplay->add_option("--total", selfplay_args.total, "Total chips, split evenly")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max() / 4));
  selfplay->add_option("--trials", selfplay_args.trials, "Fillings per decision")
      ->check(CLI::PositiveNumber);
  selfplay->add_option("--seed", selfplay_args.seed, "Random seed");
  selfplay->add_option("--workers", selfplay_args.workers, "Worker threads")
      ->check(CLI::Range(1, 256));
  selfplay->add_option("--games", selfplay_args.games, "Number of games")
      ->check(CLI::Range(1, 100000));
  selfplay->add_option("--opponent", selfplay_args.opponent, "advisor or random")
      ->check(CLI::IsMember({"advisor", "random"}));
  selfplay->add_flag("--json", as_json, "Machine-readable output");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string snapshot_dir;
  std::uint64_t budget = 300'000;
  int serve_workers = 1;
  auto* serve = app.add_subcommand("serve", "Run the HTTP game service");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port", port, "Listen port")->check(CLI::Range(0, 65535));
  serve->add_option("--snapshot-dir", snapshot_dir, "Directory for game snapshots");
  serve->add_option("--trials", budget, "Default fillings per AI decision")
      ->check(CLI::PositiveNumber);
  serve->add_option("--workers", serve_workers, "Worker threads per AI decision")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*advise) {
      if (advise_args.own > advise_args.total) {
        std::cerr << "error: --own exceeds --total\n";
        return kExitUsage;
      }
      return run_advise(advise_args, as_json);
    }
    if (*exact) return run_exact(exact_pos, exact_cap, as_json);
    if (*verify) return run_verify(verify_options, as_json);
    if (*bench) return run_bench(bench_size, bench_seconds, bench_workers, bench_seed, as_json);
    if (*selfplay) return run_selfplay(selfplay_args, as_json);
    if (*serve) return run_serve(host, port, snapshot_dir, budget, serve_workers);
  } catch (const bidhex::Error& e) {
    std::cerr << "error (" << bidhex::error_code_name(e.code()) << "): " << e.what() << '\n';
    const bool usage = e.code() == bidhex::ErrorCode::Parse ||
                       e.code() == bidhex::ErrorCode::Config ||
                       e.code() == bidhex::ErrorCode::Bounds;
    return usage ? kExitUsage : kExitFailed;
  }
  return kExitUsage;
}
