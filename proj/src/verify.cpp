#include "bidhex/verify.hpp"

#include <algorithm>
#include <random>

#include "bidhex/montecarlo.hpp"

namespace bidhex {

std::vector<Position> sample_positions(int count, int max_empty, std::uint64_t seed,
                                       bool ongoing_only) {
  std::mt19937_64 rng(seed);
  std::vector<Position> out;
  out.reserve(count);
  std::uniform_int_distribution<int> side_dist(2, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  while (static_cast<int>(out.size()) < count) {
    const int side = side_dist(rng);
    const int cells = side * side;
    std::uniform_int_distribution<int> empty_dist(1, std::min(max_empty, cells));
    const int empties = empty_dist(rng);
    std::vector<int> order(cells);
    for (int i = 0; i < cells; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Position p(side);
    for (int i = empties; i < cells; ++i) {
      p.set(p.cell_at(order[i]), coin(rng) ? CellState::Amber : CellState::Blue);
    }
    if (ongoing_only && status(p) != GameStatus::Ongoing) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Position> empty_reference_boards() {
  return {Position(1), Position(2), Position(2, 3), Position(3)};
}

namespace {

void record(CheckReport& report, bool ok, const Position& p) {
  ++report.checked;
  if (ok) return;
  ++report.failed;
  if (report.failures.size() < 5) report.failures.push_back(format_position(p));
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return Rational(boost::multiprecision::cpp_int(num),
                  boost::multiprecision::cpp_int(den));
}

}  // namespace

CheckReport check_losing_color_identity(const std::vector<Position>& positions) {
  CheckReport report;
  report.name = "losing-colour identity";
  for (const Position& p : positions) {
    const CriticalityStats stats = enumerate_stats(p);
    bool ok = true;
    for (std::size_t j = 0; j < stats.cells.size(); ++j) {
      ok = ok && stats.not_critical_count[j] == 2 * stats.losing_count[j];
    }
    record(report, ok, p);
  }
  return report;
}

CheckReport check_richman_filling_agreement(const std::vector<Position>& positions,
                                            RichmanSolver& solver) {
  CheckReport report;
  report.name = "richman/filling agreement";
  for (const Position& p : positions) {
    const CriticalityStats stats = enumerate_stats(p);
    const NodeEval eval = solver.eval(p);
    record(report, 1 - eval.r_value == ratio(stats.amber_wins, stats.trials), p);
  }
  return report;
}

CheckReport check_optimal_bid_agreement(const std::vector<Position>& positions,
                                        RichmanSolver& solver) {
  CheckReport report;
  report.name = "optimal move/bid agreement";
  for (const Position& p : positions) {
    if (status(p) != GameStatus::Ongoing) continue;
    const CriticalityStats stats = enumerate_stats(p);
    const NodeEval eval = solver.eval(p);
    const auto least = *std::min_element(stats.losing_count.begin(),
                                         stats.losing_count.end());
    std::vector<Cell> argmin;
    for (std::size_t j = 0; j < stats.cells.size(); ++j) {
      if (stats.losing_count[j] == least) argmin.push_back(stats.cells[j]);
    }
    const Rational l = ratio(least, stats.trials);
    const bool ok = Rational(1, 2) - l == eval.delta &&
                    1 - 2 * l == eval.r_plus - eval.r_minus &&
                    argmin == eval.alice_optimal && argmin == eval.bob_optimal;
    record(report, ok, p);
  }
  return report;
}

std::vector<CheckReport> run_verification(const VerifyOptions& options) {
  RichmanSolver solver;
  const int solver_cap = std::min(options.max_empty, solver.empty_cap());

  std::vector<Position> identity_set;
  std::vector<Position> solver_set;
  for (Position& p : empty_reference_boards()) {
    if (p.empty_count() <= solver_cap) solver_set.push_back(p);
    if (p.empty_count() <= options.max_empty) identity_set.push_back(std::move(p));
  }
  for (Position& p : sample_positions(options.random_positions, options.max_empty,
                                      options.seed)) {
    if (p.empty_count() <= solver_cap) solver_set.push_back(p);
    identity_set.push_back(std::move(p));
  }
  return {check_losing_color_identity(identity_set),
          check_richman_filling_agreement(solver_set, solver),
          check_optimal_bid_agreement(solver_set, solver)};
}

}  // namespace bidhex
