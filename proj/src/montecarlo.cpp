#include "bidhex/montecarlo.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

#include "bidhex/detail/connect.hpp"

namespace bidhex {

void TrialConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::Config, "trial count must be at least 1");
  if (workers < 1) throw Error(ErrorCode::Config, "worker count must be at least 1");
}

std::optional<std::size_t> CriticalityStats::find(Cell c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

std::uint64_t CriticalityStats::losing(Cell c) const {
  auto i = find(c);
  if (!i) {
    throw Error(ErrorCode::Bounds, "cell (" + std::to_string(c.row) + "," +
                                       std::to_string(c.col) +
                                       ") is not an open cell");
  }
  return losing_count[*i];
}

double CriticalityStats::l_hat(Cell c) const {
  return static_cast<double>(losing(c)) / static_cast<double>(trials);
}

double CriticalityStats::criticality(Cell c) const { return 1.0 - 2.0 * l_hat(c); }

namespace {

void require_ongoing(const Position& position) {
  const GameStatus s = status(position);
  if (s != GameStatus::Ongoing) {
    throw Error(ErrorCode::GameOver,
                std::string("position is already decided: ") + status_name(s));
  }
}

// Writes one uniform filling of the open cells into `board`. Bit j of the
// stream (least significant first, 64 per word) colours open cell j; a set
// bit means Amber.
class FillingSampler {
 public:
  explicit FillingSampler(const Position& position)
      : rows_(position.rows()), cols_(position.cols()), base_(position.cells()) {
    for (int i = 0; i < position.cell_count(); ++i) {
      if (base_[i] == CellState::Empty) open_.push_back(i);
    }
  }

  const std::vector<int>& open() const noexcept { return open_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::vector<CellState>& base() const noexcept { return base_; }

  void fill(std::vector<CellState>& board, TrialStream& stream) const {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < open_.size(); ++j) {
      if ((j & 63) == 0) word = stream.next();
      board[open_[j]] = (word & 1) ? CellState::Amber : CellState::Blue;
      word >>= 1;
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<CellState> base_;
  std::vector<int> open_;
};

struct PartialCounts {
  std::uint64_t amber_wins = 0;
  std::vector<std::uint64_t> losing;
};

void run_worker(const FillingSampler& sampler, const TrialConfig& config,
                std::uint64_t first, PartialCounts& out) {
  const auto& open = sampler.open();
  out.losing.assign(open.size(), 0);
  std::vector<CellState> board = sampler.base();
  detail::FloodScratch scratch;
  const std::uint64_t step = static_cast<std::uint64_t>(config.workers);
  for (std::uint64_t i = first; i < config.trials; i += step) {
    TrialStream stream(config.seed, i);
    sampler.fill(board, stream);
    const bool amber = detail::amber_connects(board, sampler.rows(),
                                              sampler.cols(), CellState::Amber,
                                              scratch);
    const CellState losing = amber ? CellState::Blue : CellState::Amber;
    out.amber_wins += amber;
    for (std::size_t j = 0; j < open.size(); ++j) {
      out.losing[j] += (board[open[j]] == losing);
    }
  }
}

}  // namespace

Filling sample_filling(const Position& position, TrialStream& stream) {
  require_ongoing(position);
  FillingSampler sampler(position);
  std::vector<CellState> board = sampler.base();
  sampler.fill(board, stream);
  Position out(position.rows(), position.cols());
  for (int i = 0; i < position.cell_count(); ++i) out.set(out.cell_at(i), board[i]);
  return Filling(std::move(out));
}

CriticalityStats run_trials(const Position& position, const TrialConfig& config) {
  config.validate();
  require_ongoing(position);
  const FillingSampler sampler(position);

  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(config.workers), config.trials));
  std::vector<PartialCounts> parts(workers);
  if (workers == 1) {
    run_worker(sampler, config, 0, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) {
      threads.emplace_back(run_worker, std::cref(sampler), std::cref(config),
                           static_cast<std::uint64_t>(w), std::ref(parts[w]));
    }
    run_worker(sampler, config, 0, parts[0]);
    for (auto& t : threads) t.join();
  }

  CriticalityStats stats;
  stats.trials = config.trials;
  stats.cells = position.empty_cells();
  stats.losing_count.assign(stats.cells.size(), 0);
  for (const auto& part : parts) {
    stats.amber_wins += part.amber_wins;
    for (std::size_t j = 0; j < part.losing.size(); ++j) {
      stats.losing_count[j] += part.losing[j];
    }
  }
  return stats;
}

CriticalityStats enumerate_stats(const Position& position) {
  const int n = position.empty_count();
  if (n > kEnumerationCap) {
    throw Error(ErrorCode::TooLarge,
                "position has " + std::to_string(n) +
                    " empty cells; enumeration is capped at " +
                    std::to_string(kEnumerationCap));
  }
  const FillingSampler sampler(position);
  const auto& open = sampler.open();
  std::vector<CellState> board = sampler.base();
  detail::FloodScratch scratch;

  CriticalityStats stats;
  stats.trials = std::uint64_t{1} << n;
  stats.cells = position.empty_cells();
  stats.losing_count.assign(n, 0);
  stats.not_critical_count.assign(n, 0);

  const auto amber_wins = [&] {
    return detail::amber_connects(board, sampler.rows(), sampler.cols(),
                                  CellState::Amber, scratch);
  };
  const auto flip = [](CellState s) {
    return s == CellState::Amber ? CellState::Blue : CellState::Amber;
  };

  for (std::uint64_t mask = 0; mask < stats.trials; ++mask) {
    for (int j = 0; j < n; ++j) {
      board[open[j]] = ((mask >> j) & 1) ? CellState::Amber : CellState::Blue;
    }
    const bool amber = amber_wins();
    const CellState winner = amber ? CellState::Amber : CellState::Blue;
    stats.amber_wins += amber;
    for (int j = 0; j < n; ++j) {
      const CellState own = board[open[j]];
      stats.losing_count[j] += (own != winner);
      board[open[j]] = flip(own);
      const bool still_amber = amber_wins();
      board[open[j]] = own;
      stats.not_critical_count[j] += (still_amber == amber);
    }
  }
  return stats;
}

BidAdvice advise(const Position& position, const CriticalityStats& stats,
                 std::int64_t total_chips, std::int64_t own_chips,
                 const AdviseOptions& options) {
  if (total_chips < 2) {
    throw Error(ErrorCode::Config, "total chips must be at least 2");
  }
  if (own_chips < 0 || own_chips > total_chips) {
    throw Error(ErrorCode::Config, "own chips must lie in [0, total chips]");
  }
  const GameStatus s = status(position);
  if (s != GameStatus::Ongoing) {
    throw Error(ErrorCode::GameOver,
                std::string("position is already decided: ") + status_name(s));
  }
  if (stats.trials == 0 || stats.cells != position.empty_cells() ||
      stats.losing_count.size() != stats.cells.size()) {
    throw Error(ErrorCode::StaleStats,
                "statistics were not computed for this position");
  }

  const auto best = *std::min_element(stats.losing_count.begin(),
                                      stats.losing_count.end());
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < stats.losing_count.size(); ++j) {
    if (stats.losing_count[j] == best) candidates.push_back(j);
  }
  std::size_t pick = candidates.front();
  if (options.random_tie_break && candidates.size() > 1) {
    std::mt19937_64 rng(options.tie_seed);
    std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
    pick = candidates[dist(rng)];
  }

  // floor((T - 2L) * total / (2T)), exact.
  const __int128 t = stats.trials;
  const __int128 numerator = (t - 2 * static_cast<__int128>(best)) * total_chips;
  __int128 raw = numerator <= 0 ? 0 : numerator / (2 * t);
  if (raw > own_chips) raw = own_chips;

  BidAdvice out;
  out.hex = stats.cells[pick];
  out.bid = static_cast<std::int64_t>(raw);
  out.losing_count = best;
  out.trials = stats.trials;
  out.l_hat = static_cast<double>(best) / static_cast<double>(stats.trials);
  out.criticality = 1.0 - 2.0 * out.l_hat;
  out.position_status = s;
  return out;
}

}  // namespace bidhex
