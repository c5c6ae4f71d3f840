#pragma once

#include <memory>
#include <string>

#include "bidhex/session_store.hpp"

namespace httplib {
class Server;
}

namespace bidhex {

// JSON-over-HTTP front end for a SessionStore.
//
//   POST /games                  {config?, ai_player?, trial_budget?, seed?} -> {id, view}
//   GET  /games/{id}             -> view
//   POST /games/{id}/bids        {player, bid} -> view
//   POST /games/{id}/moves       {player, cell: {row, col}} -> view
//   GET  /games/{id}/advice?player=alice|bob -> advice
//   GET  /games/{id}/snapshot    -> text document, sealed bids redacted
//   POST /games/restore          text document -> {id, view}
//
// Errors are {"code": ..., "message": ...}.
class HttpServer {
 public:
  explicit HttpServer(SessionStore& store);
  ~HttpServer();

  // Binds to host:port (port 0 picks a free port) and returns the bound port,
  // or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks serving requests until stop().
  bool listen();
  void stop();

 private:
  SessionStore& store_;
  std::unique_ptr<httplib::Server> server_;
};

int http_status(ErrorCode code);

}  // namespace bidhex
