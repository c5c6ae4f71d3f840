#include "bidhex/http_server.hpp"

#include <httplib.h>

#include "bidhex/json_io.hpp"

namespace bidhex {

using nlohmann::json;

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::Phase:
    case ErrorCode::DuplicateBid:
    case ErrorCode::GameOver:
    case ErrorCode::StaleStats:
    case ErrorCode::Conflict: return 409;
    case ErrorCode::Forbidden: return 403;
    default: return 400;
  }
}

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code,
                const std::string& message) {
  send_json(res, status, {{"code", code}, {"message", message}});
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json body = json::parse(req.body);  // json::parse_error is reported as bad_request
  if (!body.is_object()) throw Error(ErrorCode::Config, "request body must be a JSON object");
  return body;
}

PlayerId player_of(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::Config, "player must be \"alice\" or \"bob\"");
  auto p = parse_player(j.get<std::string>());
  if (!p) throw Error(ErrorCode::Config, "player must be \"alice\" or \"bob\"");
  return *p;
}

template <typename T>
T number_of(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_number_integer()) {
    throw Error(ErrorCode::Config, std::string(key) + " must be an integer");
  }
  return body[key].get<T>();
}

// Runs `fn`, translating exceptions into error bodies.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      send_error(res, http_status(e.code()), error_code_name(e.code()), e.what());
    } catch (const json::exception& e) {
      send_error(res, 400, "bad_request", e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, "internal", e.what());
    }
  };
}

}  // namespace

HttpServer::HttpServer(SessionStore& store)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;

  s.Post("/games/restore", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const std::string id = store_.restore(req.body);
    send_json(res, 201, {{"id", id}, {"view", store_.view(id)}});
  }));

  s.Post("/games", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    SessionRequest request;
    request.config = config_from_json(body.value("config", json()));
    if (body.contains("ai_player") && !body["ai_player"].is_null()) {
      request.ai_player = player_of(body["ai_player"]);
    }
    if (body.contains("trial_budget") && !body["trial_budget"].is_null()) {
      const auto budget = number_of<std::int64_t>(body, "trial_budget");
      if (budget < 1) throw Error(ErrorCode::Config, "trial budget must be at least 1");
      request.trial_budget = static_cast<std::uint64_t>(budget);
    }
    if (body.contains("seed") && !body["seed"].is_null()) {
      request.seed = number_of<std::uint64_t>(body, "seed");
    }
    const std::string id = store_.create(request);
    send_json(res, 201, {{"id", id}, {"view", store_.view(id)}});
  }));

  s.Get("/games/:id", guarded([this](const httplib::Request& req, httplib::Response& res) {
    send_json(res, 200, store_.view(req.path_params.at("id")));
  }));

  s.Post("/games/:id/bids", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const PlayerId player = player_of(body.value("player", json()));
    const auto bid = number_of<std::int64_t>(body, "bid");
    send_json(res, 200, store_.post_bid(req.path_params.at("id"), player, bid));
  }));

  s.Post("/games/:id/moves", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const PlayerId player = player_of(body.value("player", json()));
    const Cell cell = cell_from_json(body.value("cell", json()));
    send_json(res, 200, store_.post_move(req.path_params.at("id"), player, cell));
  }));

  s.Get("/games/:id/advice", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const PlayerId player = player_of(json(req.get_param_value("player")));
    send_json(res, 200, advice_json(store_.advice(req.path_params.at("id"), player)));
  }));

  s.Get("/games/:id/snapshot", guarded([this](const httplib::Request& req, httplib::Response& res) {
    res.status = 200;
    res.set_content(store_.snapshot(req.path_params.at("id")), "text/plain");
  }));
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

}  // namespace bidhex
