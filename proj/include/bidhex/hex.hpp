#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bidhex/error.hpp"

namespace bidhex {

inline constexpr int kMaxBoardSize = 19;

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Amber belongs to Alice and joins row 0 to row N-1.
// Blue belongs to Bob and joins column 0 to column N-1.
enum class Color : std::uint8_t { Amber, Blue };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Amber ? Color::Blue : Color::Amber;
}

enum class CellState : std::uint8_t { Empty = 0, Amber = 1, Blue = 2 };

constexpr CellState to_state(Color c) noexcept {
  return c == Color::Amber ? CellState::Amber : CellState::Blue;
}

enum class GameStatus { Ongoing, AmberWon, BlueWon };

const char* color_name(Color c);
const char* status_name(GameStatus s);

// Adjacency offsets of the rhombic hex grid, in the fixed output order of
// neighbors().
inline constexpr int kNeighborOffsets[6][2] = {
    {-1, 0}, {-1, +1}, {0, -1}, {0, +1}, {+1, -1}, {+1, 0}};

// Rhombus board of rows x cols hexes, stored row-major. Play uses square
// boards; rectangular ones exist for small exact studies.
class Position {
 public:
  explicit Position(int size) : Position(size, size) {}
  Position(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  // Side length of a square board (the row count otherwise).
  int size() const noexcept { return rows_; }
  int cell_count() const noexcept { return rows_ * cols_; }

  bool in_bounds(Cell c) const noexcept {
    return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
  }
  int index(Cell c) const noexcept { return c.row * cols_ + c.col; }
  Cell cell_at(int index) const noexcept { return {index / cols_, index % cols_}; }

  // Throws Error(Bounds) for cells outside the board.
  CellState at(Cell c) const;
  void set(Cell c, CellState s);

  // Copy with one extra stone; the target cell must be empty.
  Position with_stone(Cell c, Color color) const;

  int empty_count() const noexcept;
  // Empty cells in row-major order.
  std::vector<Cell> empty_cells() const;

  const std::vector<CellState>& cells() const noexcept { return cells_; }

  // Board with rows and columns exchanged and Amber/Blue swapped (a
  // rows x cols board becomes cols x rows).
  Position transposed_swapped() const;

  friend bool operator==(const Position&, const Position&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<CellState> cells_;
};

// A Position with no empty cells.
class Filling {
 public:
  // Throws Error(IncompletePosition) if `position` has an empty cell.
  explicit Filling(Position position);

  const Position& position() const noexcept { return position_; }

 private:
  Position position_;
};

// In-bounds neighbours of `cell`, in kNeighborOffsets order.
std::vector<Cell> neighbors(Cell cell, int size);
std::vector<Cell> neighbors(Cell cell, int rows, int cols);

// Walks the amber/blue boundary starting at the west corner with amber on
// the left. Ending at the north corner means Blue wins, south means Amber.
Color winner_trace(const Filling& filling);

// Flood fill from row 0 through amber cells.
Color winner_connectivity(const Filling& filling);

GameStatus status(const Position& position);

// `<N>:<row0>/<row1>/.../<rowN-1>` with '.', 'A', 'B'. Rectangular boards
// use `<R>x<C>:` in place of `<N>:`.
Position parse_position(std::string_view text);
std::string format_position(const Position& position);

}  // namespace bidhex
