#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "beacon/config_space.hpp"
#include "beacon/instance.hpp"
#include "beacon/simulate.hpp"

namespace httplib {
class Server;
}

namespace beacon {

/// A failed request: HTTP status plus a machine-readable code.
class ServiceError : public std::runtime_error {
public:
  ServiceError(int status, std::string code, const std::string& message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }

private:
  int status_;
  std::string code_;
};

/// Session bookkeeping behind the HTTP routes. Every handler takes and
/// returns wire JSON, so it can be driven without a socket. Requests on one
/// session are serialized; different sessions run concurrently.
class SessionService {
public:
  explicit SessionService(std::map<std::string, Instance> library);
  /// Library of the built-in instances.
  static std::map<std::string, Instance> builtin_library();

  nlohmann::json list_instances() const;
  /// Body: {"builtin": name} or {"instance": document}, optional "mode".
  nlohmann::json create(const nlohmann::json& body);
  nlohmann::json get(const std::string& id);
  /// Body: {"target": [x, y], "step": "p/q"}. The target is clamped to the
  /// instance's mode; the reply carries the walked path and the ball's events.
  nlohmann::json move(const std::string& id, const nlohmann::json& body);
  nlohmann::json reset(const std::string& id);
  /// Label zones of the reachable configuration graph, computed once per session.
  nlohmann::json labels(const std::string& id);

  /// Registers the /api routes on `server`.
  void mount(httplib::Server& server);

private:
  struct Session {
    explicit Session(SessionState s) : state(std::move(s)) {}
    std::mutex mutex;
    SessionState state;
    std::optional<nlohmann::json> labels;
  };
  std::shared_ptr<Session> find(const std::string& id);

  std::map<std::string, Instance> library_;
  std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  long next_id_ = 1;
};

/// Blocks serving the API (and `static_dir` under / when non-empty).
/// Throws ServiceError if the port cannot be bound.
void serve(SessionService& service, const std::string& host, int port, const std::string& static_dir = {});

}  // namespace beacon
