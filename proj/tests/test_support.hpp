#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bidhex/hex.hpp"

namespace bidhex::test {

// Union-find over blue cells with virtual left/right nodes. Deliberately
// shares nothing with the library's amber flood fill.
inline Color blue_union_find_winner(const Position& p) {
  const int rows = p.rows();
  const int cols = p.cols();
  const int left = rows * cols;
  const int right = left + 1;
  std::vector<int> parent(rows * cols + 2);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[root(a)] = root(b); };
  auto blue = [&](int r, int c) { return p.cells()[r * cols + c] == CellState::Blue; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!blue(r, c)) continue;
      const int i = r * cols + c;
      if (c == 0) join(i, left);
      if (c == cols - 1) join(i, right);
      // Forward half of the six offsets is enough for an undirected graph.
      if (c + 1 < cols && blue(r, c + 1)) join(i, i + 1);
      if (r + 1 < rows && blue(r + 1, c)) join(i, i + cols);
      if (r + 1 < rows && c - 1 >= 0 && blue(r + 1, c - 1)) join(i, i + cols - 1);
    }
  }
  return root(left) == root(right) ? Color::Blue : Color::Amber;
}

// Fills every cell from `bits` (bit i set -> Amber), row-major.
inline Position filling_from_bits(int rows, int cols, std::uint64_t bits) {
  Position p(rows, cols);
  for (int i = 0; i < rows * cols; ++i) {
    p.set(p.cell_at(i), ((bits >> i) & 1) ? CellState::Amber : CellState::Blue);
  }
  return p;
}

inline Position random_filling(int rows, int cols, std::mt19937_64& rng) {
  Position p(rows, cols);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < rows * cols; ++i) {
    p.set(p.cell_at(i), coin(rng) ? CellState::Amber : CellState::Blue);
  }
  return p;
}

// Brute-force count of fillings of the empty cells that Amber wins, using
// the union-find oracle.
inline std::uint64_t amber_winning_fillings(const Position& p) {
  const auto open = p.empty_cells();
  std::uint64_t wins = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
    Position f = p;
    for (std::size_t j = 0; j < open.size(); ++j) {
      f.set(open[j], ((mask >> j) & 1) ? CellState::Amber : CellState::Blue);
    }
    wins += blue_union_find_winner(f) == Color::Amber;
  }
  return wins;
}

}  // namespace bidhex::test
