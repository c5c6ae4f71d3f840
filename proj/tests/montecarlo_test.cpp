#include "bidhex/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "bidhex/verify.hpp"
#include "test_support.hpp"

namespace bidhex {
namespace {

struct BruteStats {
  std::uint64_t trials = 0;
  std::uint64_t amber_wins = 0;
  std::vector<std::uint64_t> losing;
  std::vector<std::uint64_t> not_critical;
};

// Independent enumeration using the union-find winner and the literal
// flip-the-cell definition of criticality.
BruteStats brute_stats(const Position& p) {
  const auto open = p.empty_cells();
  BruteStats out;
  out.trials = std::uint64_t{1} << open.size();
  out.losing.assign(open.size(), 0);
  out.not_critical.assign(open.size(), 0);
  for (std::uint64_t mask = 0; mask < out.trials; ++mask) {
    Position f = p;
    for (std::size_t j = 0; j < open.size(); ++j) {
      f.set(open[j], ((mask >> j) & 1) ? CellState::Amber : CellState::Blue);
    }
    const Color winner = test::blue_union_find_winner(f);
    out.amber_wins += winner == Color::Amber;
    for (std::size_t j = 0; j < open.size(); ++j) {
      const CellState own = f.at(open[j]);
      out.losing[j] += own != to_state(winner);
      Position flipped = f;
      flipped.set(open[j], own == CellState::Amber ? CellState::Blue : CellState::Amber);
      out.not_critical[j] += test::blue_union_find_winner(flipped) == winner;
    }
  }
  return out;
}

TEST(TrialConfigTest, RejectsZeroTrialsAndWorkers) {
  EXPECT_THROW((TrialConfig{0, 1, 1}.validate()), Error);
  EXPECT_THROW((TrialConfig{10, 1, 0}.validate()), Error);
  EXPECT_NO_THROW((TrialConfig{1, 1, 1}.validate()));
  EXPECT_THROW(run_trials(Position(2), {0, 1, 1}), Error);
}

TEST(SampleFillingTest, DecidedPositionIsGameOver) {
  TrialStream stream(1, 0);
  try {
    sample_filling(parse_position("2:AB/BA"), stream);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GameOver);
  }
  EXPECT_THROW(sample_filling(parse_position("2:A./A."), stream), Error);
}

TEST(SampleFillingTest, SingleCellIsAFairCoin) {
  constexpr int kDraws = 100'000;
  int amber = 0;
  for (int i = 0; i < kDraws; ++i) {
    TrialStream stream(42, i);
    amber += sample_filling(Position(1), stream).position().at({0, 0}) == CellState::Amber;
  }
  const double sigma = std::sqrt(kDraws * 0.25);
  EXPECT_LE(std::abs(amber - kDraws / 2.0), 3 * sigma);
}

TEST(SampleFillingTest, PreservesStonesAndIsDeterministic) {
  const Position p = parse_position("3:A.B/.../B.A");
  for (int i = 0; i < 200; ++i) {
    TrialStream a(9, i);
    TrialStream b(9, i);
    const Filling f = sample_filling(p, a);
    EXPECT_EQ(f.position().at({0, 0}), CellState::Amber);
    EXPECT_EQ(f.position().at({0, 2}), CellState::Blue);
    EXPECT_EQ(f.position().at({2, 0}), CellState::Blue);
    EXPECT_EQ(f.position().at({2, 2}), CellState::Amber);
    EXPECT_EQ(f.position(), sample_filling(p, b).position());
  }
}

TEST(RunTrialsTest, SingleCellNeverLoses) {
  const auto stats = run_trials(Position(1), {1000, 3, 1});
  EXPECT_EQ(stats.trials, 1000u);
  EXPECT_EQ(stats.losing({0, 0}), 0u);
}

TEST(RunTrialsTest, TwoByTwoConvergesToEnumeration) {
  const Position board(2);
  const BruteStats exact = brute_stats(board);
  const auto stats = run_trials(board, {100'000, 12345, 1});
  ASSERT_EQ(stats.cells.size(), 4u);
  for (std::size_t j = 0; j < 4; ++j) {
    const double l_exact = static_cast<double>(exact.losing[j]) / exact.trials;
    EXPECT_NEAR(stats.l_hat(stats.cells[j]), l_exact, 0.01);
  }
}

TEST(RunTrialsTest, DeterministicAndWorkerInvariant) {
  const Position p = parse_position("5:..A../.B.../...../..A../B....");
  const auto a = run_trials(p, {20'000, 77, 1});
  const auto b = run_trials(p, {20'000, 77, 1});
  const auto c = run_trials(p, {20'000, 77, 3});
  const auto d = run_trials(p, {20'000, 77, 8});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a, d);
  EXPECT_NE(a, run_trials(p, {20'000, 78, 1}));
}

TEST(RunTrialsTest, MoreWorkersThanTrials) {
  const auto a = run_trials(Position(3), {3, 5, 1});
  EXPECT_EQ(a, run_trials(Position(3), {3, 5, 16}));
}

TEST(RunTrialsTest, KeysAreTheOpenCells) {
  const Position p = parse_position("3:A../.B./...");
  const auto stats = run_trials(p, {100, 1, 1});
  EXPECT_EQ(stats.cells, p.empty_cells());
  for (auto n : stats.losing_count) EXPECT_LE(n, stats.trials);
  EXPECT_THROW(stats.losing({0, 0}), Error);
}

TEST(RunTrialsTest, DecidedPositionIsGameOver) {
  EXPECT_THROW(run_trials(parse_position("2:A./A."), {10, 1, 1}), Error);
}

TEST(EnumerateTest, SingleCell) {
  const auto stats = enumerate_stats(Position(1));
  EXPECT_EQ(stats.trials, 2u);
  EXPECT_EQ(stats.losing({0, 0}), 0u);
  EXPECT_EQ(stats.criticality({0, 0}), 1.0);
  EXPECT_EQ(stats.amber_wins, 1u);
}

TEST(EnumerateTest, TwoByTwoNotCriticalIsTwiceLosing) {
  const auto stats = enumerate_stats(Position(2));
  EXPECT_EQ(stats.trials, 16u);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(stats.not_critical_count[j], 2 * stats.losing_count[j]);
  }
}

TEST(EnumerateTest, MatchesBruteForce) {
  auto positions = sample_positions(150, 9, 4242, false);
  for (Position p : empty_reference_boards()) positions.push_back(p);
  for (const Position& p : positions) {
    const auto stats = enumerate_stats(p);
    const BruteStats brute = brute_stats(p);
    EXPECT_EQ(stats.trials, brute.trials);
    EXPECT_EQ(stats.amber_wins, brute.amber_wins) << format_position(p);
    EXPECT_EQ(stats.losing_count, brute.losing) << format_position(p);
    EXPECT_EQ(stats.not_critical_count, brute.not_critical) << format_position(p);
  }
}

TEST(EnumerateTest, CapIsEnforced) {
  try {
    enumerate_stats(Position(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(AdviseTest, SingleCellBidsEverything) {
  const Position board(1);
  const auto stats = run_trials(board, {1000, 7, 1});
  const BidAdvice a = advise(board, stats, 200, 100);
  EXPECT_EQ(a.hex, (Cell{0, 0}));
  EXPECT_EQ(a.bid, 100);
  EXPECT_EQ(a.l_hat, 0.0);
  EXPECT_EQ(a.criticality, 1.0);
  EXPECT_EQ(a.position_status, GameStatus::Ongoing);
}

TEST(AdviseTest, ClampsToOwnChips) {
  const Position board(1);
  const auto stats = enumerate_stats(board);
  EXPECT_EQ(advise(board, stats, 200, 30).bid, 30);
  EXPECT_EQ(advise(board, stats, 200, 0).bid, 0);
  EXPECT_EQ(advise(board, stats, 201, 201).bid, 100);
}

TEST(AdviseTest, FloorUsesExactCounts) {
  const Position board(2);
  CriticalityStats stats;
  stats.trials = 3;
  stats.cells = board.empty_cells();
  stats.losing_count = {1, 1, 2, 1};
  // (1/2 - 1/3) * 100 = 16.67 -> 16; first minimal cell wins the tie.
  const BidAdvice a = advise(board, stats, 100, 100);
  EXPECT_EQ(a.bid, 16);
  EXPECT_EQ(a.hex, (Cell{0, 0}));
  EXPECT_EQ(a.losing_count, 1u);
}

TEST(AdviseTest, NoBidWhenEveryCellLosesHalfTheTime) {
  const Position board(2);
  CriticalityStats stats;
  stats.trials = 10;
  stats.cells = board.empty_cells();
  stats.losing_count = {5, 6, 7, 9};
  EXPECT_EQ(advise(board, stats, 200, 100).bid, 0);
  stats.losing_count = {10, 6, 7, 9};
  const BidAdvice a = advise(board, stats, 200, 100);
  EXPECT_EQ(a.bid, 0);
  EXPECT_EQ(a.hex, (Cell{0, 1}));
}

TEST(AdviseTest, RandomTieBreakStaysAmongBest) {
  const Position board(2);
  CriticalityStats stats;
  stats.trials = 10;
  stats.cells = board.empty_cells();
  stats.losing_count = {3, 2, 2, 4};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BidAdvice a = advise(board, stats, 200, 100, {true, seed});
    EXPECT_TRUE(a.hex == (Cell{0, 1}) || a.hex == (Cell{1, 0}));
  }
}

TEST(AdviseTest, Errors) {
  const Position board(2);
  const auto stats = enumerate_stats(board);
  EXPECT_THROW(advise(board, stats, 1, 1), Error);
  EXPECT_THROW(advise(board, stats, 10, 11), Error);
  EXPECT_THROW(advise(board, stats, 10, -1), Error);
  try {
    advise(parse_position("2:A./.."), stats, 200, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StaleStats);
  }
  const Position won = parse_position("2:A./A.");
  try {
    advise(won, enumerate_stats(won), 200, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GameOver);
  }
}

TEST(AdviseTest, ThreeByThreeSamplingFindsTheExactBest) {
  const Position board(3);
  const BruteStats exact = brute_stats(board);
  const auto least = *std::min_element(exact.losing.begin(), exact.losing.end());
  ASSERT_EQ(std::count(exact.losing.begin(), exact.losing.end(), least), 1);
  const auto best = board.empty_cells()[std::min_element(exact.losing.begin(),
                                                         exact.losing.end()) -
                                        exact.losing.begin()];
  EXPECT_EQ(best, (Cell{1, 1}));
  const auto stats = run_trials(board, {100'000, 2024, 1});
  EXPECT_EQ(advise(board, stats, 200, 100).hex, best);
}

}  // namespace
}  // namespace bidhex
