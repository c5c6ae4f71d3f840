#pragma once

#include <stdexcept>
#include <string>

namespace bidhex {

// Machine-readable error category. The service maps these onto HTTP status
// codes and the `code` field of error bodies.
enum class ErrorCode {
  Bounds,
  IncompletePosition,
  Parse,
  TooLarge,
  GameOver,
  StaleStats,
  Config,
  IllegalBid,
  IllegalMove,
  Phase,
  DuplicateBid,
  NotFound,
  Restore,
  Conflict,
  Forbidden,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bidhex
