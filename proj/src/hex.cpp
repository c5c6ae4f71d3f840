#include "bidhex/hex.hpp"

#include <stdexcept>
#include <string>

#include "bidhex/detail/connect.hpp"

namespace bidhex {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Bounds: return "bounds";
    case ErrorCode::IncompletePosition: return "incomplete_position";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::GameOver: return "game_over";
    case ErrorCode::StaleStats: return "stale_stats";
    case ErrorCode::Config: return "config";
    case ErrorCode::IllegalBid: return "illegal_bid";
    case ErrorCode::IllegalMove: return "illegal_move";
    case ErrorCode::Phase: return "phase";
    case ErrorCode::DuplicateBid: return "duplicate_bid";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::Restore: return "restore";
    case ErrorCode::Conflict: return "conflict";
    case ErrorCode::Forbidden: return "forbidden";
  }
  return "unknown";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const char* color_name(Color c) { return c == Color::Amber ? "amber" : "blue"; }

const char* status_name(GameStatus s) {
  switch (s) {
    case GameStatus::Ongoing: return "ongoing";
    case GameStatus::AmberWon: return "amber_won";
    case GameStatus::BlueWon: return "blue_won";
  }
  return "unknown";
}

namespace {

[[noreturn]] void throw_bounds(Cell c, int rows, int cols) {
  throw Error(ErrorCode::Bounds, "cell (" + std::to_string(c.row) + "," +
                                     std::to_string(c.col) +
                                     ") is outside a " + std::to_string(rows) +
                                     "x" + std::to_string(cols) + " board");
}

void check_dimension(int n) {
  if (n < 1 || n > kMaxBoardSize) {
    throw Error(ErrorCode::Config, "board dimensions must be in [1, " +
                                       std::to_string(kMaxBoardSize) +
                                       "], got " + std::to_string(n));
  }
}

}  // namespace

Position::Position(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dimension(rows);
  check_dimension(cols);
  cells_.assign(static_cast<std::size_t>(rows) * cols, CellState::Empty);
}

CellState Position::at(Cell c) const {
  if (!in_bounds(c)) throw_bounds(c, rows_, cols_);
  return cells_[index(c)];
}

void Position::set(Cell c, CellState s) {
  if (!in_bounds(c)) throw_bounds(c, rows_, cols_);
  cells_[index(c)] = s;
}

Position Position::with_stone(Cell c, Color color) const {
  if (at(c) != CellState::Empty) {
    throw Error(ErrorCode::IllegalMove, "cell (" + std::to_string(c.row) + "," +
                                            std::to_string(c.col) +
                                            ") is occupied");
  }
  Position next = *this;
  next.cells_[index(c)] = to_state(color);
  return next;
}

int Position::empty_count() const noexcept {
  int n = 0;
  for (CellState s : cells_) n += (s == CellState::Empty);
  return n;
}

std::vector<Cell> Position::empty_cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < cell_count(); ++i) {
    if (cells_[i] == CellState::Empty) out.push_back(cell_at(i));
  }
  return out;
}

Position Position::transposed_swapped() const {
  Position out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      CellState s = cells_[r * cols_ + c];
      if (s == CellState::Amber) {
        s = CellState::Blue;
      } else if (s == CellState::Blue) {
        s = CellState::Amber;
      }
      out.cells_[c * rows_ + r] = s;
    }
  }
  return out;
}

Filling::Filling(Position position) : position_(std::move(position)) {
  if (position_.empty_count() != 0) {
    throw Error(ErrorCode::IncompletePosition,
                "position has " + std::to_string(position_.empty_count()) +
                    " empty cells");
  }
}

std::vector<Cell> neighbors(Cell cell, int size) {
  return neighbors(cell, size, size);
}

std::vector<Cell> neighbors(Cell cell, int rows, int cols) {
  if (cell.row < 0 || cell.row >= rows || cell.col < 0 || cell.col >= cols) {
    throw_bounds(cell, rows, cols);
  }
  std::vector<Cell> out;
  out.reserve(6);
  for (const auto& d : kNeighborOffsets) {
    Cell n{cell.row + d[0], cell.col + d[1]};
    if (n.row >= 0 && n.row < rows && n.col >= 0 && n.col < cols) {
      out.push_back(n);
    }
  }
  return out;
}

namespace detail {

bool amber_connects(std::span<const CellState> cells, int rows, int cols,
                    CellState empty_as, FloodScratch& scratch) {
  const auto is_amber = [&](int i) {
    CellState s = cells[i];
    if (s == CellState::Empty) s = empty_as;
    return s == CellState::Amber;
  };
  scratch.seen.assign(cells.size(), 0);
  scratch.stack.clear();
  for (int c = 0; c < cols; ++c) {
    if (is_amber(c)) {
      scratch.seen[c] = 1;
      scratch.stack.push_back(c);
    }
  }
  const int last_row_start = (rows - 1) * cols;
  while (!scratch.stack.empty()) {
    const int i = scratch.stack.back();
    scratch.stack.pop_back();
    if (i >= last_row_start) return true;
    const int r = i / cols;
    const int c = i % cols;
    for (const auto& d : kNeighborOffsets) {
      const int nr = r + d[0];
      const int nc = c + d[1];
      if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
      const int j = nr * cols + nc;
      if (!scratch.seen[j] && is_amber(j)) {
        scratch.seen[j] = 1;
        scratch.stack.push_back(j);
      }
    }
  }
  return false;
}

}  // namespace detail

Color winner_connectivity(const Filling& filling) {
  detail::FloodScratch scratch;
  const Position& p = filling.position();
  return detail::amber_connects(p.cells(), p.rows(), p.cols(), CellState::Amber,
                                scratch)
             ? Color::Amber
             : Color::Blue;
}

namespace {

// Directions around a hex in counter-clockwise order (E, NE, NW, W, SW, SE
// when rows grow southward and each row is shifted half a hex east).
constexpr int kRing[6][2] = {{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}};

enum class Region { Outside, Amber, Blue };

// The board plus a one-cell frame: rows -1 and R are amber, columns -1 and C
// are blue. The frame corners (-1,-1) and (R,C) touch no board cell and are
// left outside.
Region region_at(const Position& p, int r, int c) {
  const int rows = p.rows();
  const int cols = p.cols();
  if (r >= 0 && r < rows && c >= 0 && c < cols) {
    return p.cells()[r * cols + c] == CellState::Amber ? Region::Amber
                                                       : Region::Blue;
  }
  if (r == -1 && c >= 0 && c <= cols) return Region::Amber;
  if (r == rows && c >= -1 && c <= cols - 1) return Region::Amber;
  if ((c == -1 || c == cols) && r >= 0 && r <= rows - 1) return Region::Blue;
  return Region::Outside;
}

}  // namespace

Color winner_trace(const Filling& filling) {
  const Position& p = filling.position();
  const int rows = p.rows();
  const int cols = p.cols();
  // The walker sits on the edge between `left` (amber) and left + kRing[dir]
  // (blue). The hex ahead is left + kRing[dir + 1].
  int lr = -1;
  int lc = 0;
  int dir = 4;
  const long max_steps = 6L * (rows + 2) * (cols + 2);
  for (long step = 0; step < max_steps; ++step) {
    const int next = (dir + 1) % 6;
    const int tr = lr + kRing[next][0];
    const int tc = lc + kRing[next][1];
    switch (region_at(p, tr, tc)) {
      case Region::Outside:
        if (lr == -1 && lc == cols) return Color::Blue;   // north corner
        if (lr == rows && lc == -1) return Color::Amber;  // south corner
        throw std::logic_error("boundary walk left the frame away from a corner");
      case Region::Amber:
        lr = tr;
        lc = tc;
        dir = (dir + 5) % 6;
        break;
      case Region::Blue:
        dir = next;
        break;
    }
  }
  throw std::logic_error("boundary walk did not terminate");
}

GameStatus status(const Position& position) {
  detail::FloodScratch scratch;
  const int rows = position.rows();
  const int cols = position.cols();
  if (!detail::amber_connects(position.cells(), rows, cols, CellState::Amber,
                              scratch)) {
    return GameStatus::BlueWon;
  }
  if (detail::amber_connects(position.cells(), rows, cols, CellState::Blue,
                             scratch)) {
    return GameStatus::AmberWon;
  }
  return GameStatus::Ongoing;
}

namespace {

// Reads a decimal dimension starting at text[i]; advances i.
int read_dimension(std::string_view text, std::size_t& i) {
  const std::size_t start = i;
  int value = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    if (value <= 1000) value = value * 10 + (text[i] - '0');
    ++i;
  }
  if (i == start) {
    throw ParseError(1, static_cast<int>(start) + 1, "expected board size");
  }
  if (value < 1 || value > kMaxBoardSize) {
    throw ParseError(1, static_cast<int>(start) + 1,
                     "board size " + std::to_string(value) + " outside [1, " +
                         std::to_string(kMaxBoardSize) + "]");
  }
  return value;
}

}  // namespace

Position parse_position(std::string_view text) {
  std::size_t i = 0;
  const int rows = read_dimension(text, i);
  int cols = rows;
  if (i < text.size() && text[i] == 'x') {
    ++i;
    cols = read_dimension(text, i);
  }
  if (i >= text.size() || text[i] != ':') {
    throw ParseError(1, static_cast<int>(i) + 1, "expected ':'");
  }
  ++i;
  Position p(rows, cols);
  const auto short_row = [&](int r, int c) {
    return ParseError(1, static_cast<int>(i) + 1,
                      "row " + std::to_string(r) + " has " + std::to_string(c) +
                          " cells, expected " + std::to_string(cols));
  };
  for (int r = 0; r < rows; ++r) {
    if (r > 0) {
      if (i >= text.size() || text[i] != '/') {
        throw ParseError(1, static_cast<int>(i) + 1,
                         "expected '/' before row " + std::to_string(r));
      }
      ++i;
    }
    for (int c = 0; c < cols; ++c, ++i) {
      if (i >= text.size()) throw short_row(r, c);
      CellState s;
      switch (text[i]) {
        case '.': s = CellState::Empty; break;
        case 'A': s = CellState::Amber; break;
        case 'B': s = CellState::Blue; break;
        case '/': throw short_row(r, c);
        default:
          throw ParseError(1, static_cast<int>(i) + 1,
                           std::string("unexpected character '") + text[i] +
                               "'");
      }
      p.set({r, c}, s);
    }
  }
  if (i != text.size()) {
    throw ParseError(1, static_cast<int>(i) + 1, "trailing characters");
  }
  return p;
}

std::string format_position(const Position& position) {
  const int rows = position.rows();
  const int cols = position.cols();
  std::string out = std::to_string(rows);
  if (!position.is_square()) out += "x" + std::to_string(cols);
  out += ':';
  for (int r = 0; r < rows; ++r) {
    if (r > 0) out += '/';
    for (int c = 0; c < cols; ++c) {
      switch (position.cells()[r * cols + c]) {
        case CellState::Empty: out += '.'; break;
        case CellState::Amber: out += 'A'; break;
        case CellState::Blue: out += 'B'; break;
      }
    }
  }
  return out;
}

}  // namespace bidhex
