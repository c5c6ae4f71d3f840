#include "bidhex/richman.hpp"

#include <cassert>

namespace bidhex {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

std::string memo_key(const Position& p) {
  std::string key;
  key.reserve(p.cells().size() + 2);
  key.push_back(static_cast<char>(p.rows()));
  key.push_back(static_cast<char>(p.cols()));
  for (CellState s : p.cells()) key.push_back(static_cast<char>(s));
  return key;
}

}  // namespace

RichmanSolver::RichmanSolver(int empty_cap) : empty_cap_(empty_cap) {
  if (empty_cap < 0) {
    throw Error(ErrorCode::Config, "empty-cell cap must be non-negative");
  }
}

std::size_t RichmanSolver::memo_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

void RichmanSolver::check_cap(const Position& position) const {
  const int empties = position.empty_count();
  if (empties > empty_cap_) {
    throw Error(ErrorCode::TooLarge,
                "position has " + std::to_string(empties) +
                    " empty cells; exact solving is capped at " +
                    std::to_string(empty_cap_));
  }
}

// Children are visited by writing into `scratch` and restoring the cell, so
// the recursion never copies positions.
const Rational& RichmanSolver::value(Position& scratch) {
  std::string key = memo_key(scratch);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Rational result;
  switch (status(scratch)) {
    case GameStatus::AmberWon: result = 0; break;
    case GameStatus::BlueWon: result = 1; break;
    case GameStatus::Ongoing: {
      bool first = true;
      Rational lo, hi;
      for (int i = 0; i < scratch.cell_count(); ++i) {
        const Cell c = scratch.cell_at(i);
        if (scratch.at(c) != CellState::Empty) continue;
        scratch.set(c, CellState::Amber);
        Rational amber_child = value(scratch);
        scratch.set(c, CellState::Blue);
        Rational blue_child = value(scratch);
        scratch.set(c, CellState::Empty);
        if (first || amber_child < lo) lo = amber_child;
        if (first || blue_child > hi) hi = blue_child;
        first = false;
      }
      result = (lo + hi) / 2;
      break;
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

NodeEval RichmanSolver::eval(const Position& position) {
  check_cap(position);
  std::lock_guard lock(mu_);
  NodeEval out;
  out.status = status(position);
  Position scratch = position;
  if (out.status != GameStatus::Ongoing) {
    out.r_value = out.status == GameStatus::AmberWon ? 0 : 1;
    out.r_plus = out.r_value;
    out.r_minus = out.r_value;
    out.delta = 0;
    return out;
  }

  std::vector<std::pair<Cell, Rational>> amber_children;
  std::vector<std::pair<Cell, Rational>> blue_children;
  for (const Cell c : position.empty_cells()) {
    scratch.set(c, CellState::Amber);
    amber_children.emplace_back(c, value(scratch));
    scratch.set(c, CellState::Blue);
    blue_children.emplace_back(c, value(scratch));
    scratch.set(c, CellState::Empty);
  }
  out.r_minus = amber_children.front().second;
  for (const auto& [c, v] : amber_children) out.r_minus = std::min(out.r_minus, v);
  out.r_plus = blue_children.front().second;
  for (const auto& [c, v] : blue_children) out.r_plus = std::max(out.r_plus, v);
  for (const auto& [c, v] : amber_children) {
    if (v == out.r_minus) out.alice_optimal.push_back(c);
  }
  for (const auto& [c, v] : blue_children) {
    if (v == out.r_plus) out.bob_optimal.push_back(c);
  }
  out.r_value = (out.r_plus + out.r_minus) / 2;
  out.delta = (out.r_plus - out.r_minus) / 2;
  assert(out.delta >= 0);
  return out;
}

Rational RichmanSolver::random_turn_value(const Position& position) {
  return 1 - eval(position).r_value;
}

}  // namespace bidhex
