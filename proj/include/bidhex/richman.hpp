#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bidhex/hex.hpp"

namespace bidhex {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);  // "p/q", or "p" when q == 1

struct NodeEval {
  Rational r_value;  // Bob's critical share; 0 when Amber has won, 1 when Blue has
  Rational r_plus;   // max over Bob's children
  Rational r_minus;  // min over Alice's children
  Rational delta;    // (r_plus - r_minus) / 2
  std::vector<Cell> alice_optimal;
  std::vector<Cell> bob_optimal;
  GameStatus status = GameStatus::Ongoing;
};

// Exact real-valued bidding values by memoized recursion over every way of
// finishing the position. The memo persists across calls on the same solver
// and is guarded by a mutex, so one solver may be shared between threads.
class RichmanSolver {
 public:
  static constexpr int kDefaultEmptyCap = 12;

  explicit RichmanSolver(int empty_cap = kDefaultEmptyCap);

  // Throws Error(TooLarge) when the position has more than empty_cap empties.
  NodeEval eval(const Position& position);

  // Alice's optimal winning probability in the random-turn game:
  // 1 - eval(position).r_value.
  Rational random_turn_value(const Position& position);

  int empty_cap() const noexcept { return empty_cap_; }
  std::size_t memo_size() const;

 private:
  const Rational& value(Position& scratch);
  void check_cap(const Position& position) const;

  int empty_cap_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Rational> memo_;
};

}  // namespace bidhex
