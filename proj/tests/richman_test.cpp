#include "bidhex/richman.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bidhex/verify.hpp"
#include "test_support.hpp"

namespace bidhex {
namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

TEST(RichmanTest, AmberWonIsZero) {
  RichmanSolver solver;
  const NodeEval e = solver.eval(parse_position("2:A./A."));
  EXPECT_EQ(e.status, GameStatus::AmberWon);
  EXPECT_EQ(e.r_value, 0);
  EXPECT_EQ(solver.random_turn_value(parse_position("2:A./A.")), 1);
}

TEST(RichmanTest, BlueWonIsOne) {
  RichmanSolver solver;
  EXPECT_EQ(solver.eval(parse_position("2:BB/..")).r_value, 1);
}

TEST(RichmanTest, EmptySingleCell) {
  RichmanSolver solver;
  const NodeEval e = solver.eval(Position(1));
  EXPECT_EQ(e.r_value, q(1, 2));
  EXPECT_EQ(e.r_plus, 1);
  EXPECT_EQ(e.r_minus, 0);
  EXPECT_EQ(e.delta, q(1, 2));
  EXPECT_EQ(e.alice_optimal, (std::vector<Cell>{{0, 0}}));
  EXPECT_EQ(e.bob_optimal, (std::vector<Cell>{{0, 0}}));
  EXPECT_EQ(solver.random_turn_value(Position(1)), q(1, 2));
}

TEST(RichmanTest, EmptyTwoByTwoIsEven) {
  RichmanSolver solver;
  EXPECT_EQ(solver.eval(Position(2)).r_value, q(1, 2));
}

TEST(RichmanTest, TwoByThreeMatchesFillingCount) {
  RichmanSolver solver;
  const Position board(2, 3);
  const std::uint64_t wins = test::amber_winning_fillings(board);  // oracle
  EXPECT_EQ(solver.random_turn_value(board),
            Rational(static_cast<long>(wins), 64));
}

TEST(RichmanTest, CapIsEnforced) {
  RichmanSolver solver(4);
  try {
    solver.eval(Position(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos);
  }
  EXPECT_THROW(solver.random_turn_value(Position(3)), Error);
  EXPECT_NO_THROW(solver.eval(Position(2)));
}

TEST(RichmanTest, RationalFormatting) {
  EXPECT_EQ(to_string(q(1, 2)), "1/2");
  EXPECT_EQ(to_string(q(3)), "3");
  EXPECT_EQ(to_string(q(6, 8)), "3/4");
}

class RichmanPropertyTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    positions_ = new std::vector<Position>(sample_positions(120, 7, 99, false));
    for (Position p : empty_reference_boards()) positions_->push_back(p);
  }
  static void TearDownTestSuite() { delete positions_; }

  static std::vector<Position>* positions_;
  RichmanSolver solver_;
};

std::vector<Position>* RichmanPropertyTest::positions_ = nullptr;

TEST_F(RichmanPropertyTest, FixedPointAndOrdering) {
  for (const Position& p : *positions_) {
    const NodeEval e = solver_.eval(p);
    EXPECT_LE(0, e.r_minus);
    EXPECT_LE(e.r_minus, e.r_value);
    EXPECT_LE(e.r_value, e.r_plus);
    EXPECT_LE(e.r_plus, 1);
    if (e.status == GameStatus::Ongoing) {
      EXPECT_EQ(e.r_value, (e.r_plus + e.r_minus) / 2) << format_position(p);
      EXPECT_EQ(e.delta, (e.r_plus - e.r_minus) / 2);
      EXPECT_GE(e.delta, 0);
    }
  }
}

TEST_F(RichmanPropertyTest, AgreesWithBruteForceFillings) {
  for (const Position& p : *positions_) {
    const auto wins = test::amber_winning_fillings(p);
    const auto total = std::uint64_t{1} << p.empty_count();
    EXPECT_EQ(1 - solver_.eval(p).r_value,
              Rational(static_cast<long>(wins), static_cast<long>(total)))
        << format_position(p);
  }
}

TEST_F(RichmanPropertyTest, OptimalMovesCoincide) {
  for (const Position& p : *positions_) {
    const NodeEval e = solver_.eval(p);
    if (e.status != GameStatus::Ongoing) continue;
    EXPECT_FALSE(e.alice_optimal.empty());
    EXPECT_EQ(e.alice_optimal, e.bob_optimal) << format_position(p);
  }
}

TEST_F(RichmanPropertyTest, ColorSwapDuality) {
  for (const Position& p : *positions_) {
    EXPECT_EQ(solver_.eval(p.transposed_swapped()).r_value, 1 - solver_.eval(p).r_value)
        << format_position(p);
  }
}

TEST(RichmanTest, MemoIsSharedAcrossCalls) {
  RichmanSolver solver;
  solver.eval(Position(3));
  const auto size = solver.memo_size();
  EXPECT_GT(size, 0u);
  solver.eval(parse_position("3:A../.../..."));
  EXPECT_EQ(solver.memo_size(), size);
}

}  // namespace
}  // namespace bidhex
