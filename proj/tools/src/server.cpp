#include "beacon/service/server.hpp"

#include <httplib.h>

#include "beacon/error.hpp"
#include "beacon/io.hpp"
#include "beacon/library.hpp"
#include "beacon/service/clamp.hpp"
#include "beacon/service/wire.hpp"

namespace beacon {

using nlohmann::json;

namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFreeMode:
    case ErrorCode::CaptureFailed:
    case ErrorCode::PerturbationFailed: return 422;
    default: return 400;
  }
}

json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

SessionService::SessionService(std::map<std::string, Instance> library) : library_(std::move(library)) {}

std::map<std::string, Instance> SessionService::builtin_library() {
  std::map<std::string, Instance> lib;
  for (const auto& name : builtin_names()) lib.emplace(name, builtin(name));
  return lib;
}

json SessionService::list_instances() const {
  json out = json::array();
  for (const auto& [name, inst] : library_) {
    out.push_back({{"name", name}, {"mode", to_string(inst.mode)}, {"vertices", inst.polygon.size()}});
  }
  return out;
}

json SessionService::create(const json& body) {
  if (!body.is_object()) throw ServiceError(400, "ParseError", "expected a JSON object");
  std::optional<Instance> inst;
  if (body.contains("builtin")) {
    const std::string name = body["builtin"].is_string() ? body["builtin"].get<std::string>() : "";
    const auto it = library_.find(name);
    if (it == library_.end()) throw ServiceError(404, "UnknownInstance", "no instance named \"" + name + "\"");
    inst = it->second;
  } else if (body.contains("instance")) {
    inst = instance_from_json(body["instance"].dump());
  } else {
    throw ServiceError(400, "ParseError", "expected \"builtin\" or \"instance\"");
  }
  if (body.contains("mode")) {
    if (!body["mode"].is_string()) throw ServiceError(400, "ParseError", "mode must be a string");
    inst->mode = parse_mode(body["mode"].get<std::string>());
  }
  auto session = std::make_shared<Session>(SessionState::start(*inst));
  std::string id;
  {
    std::lock_guard lock(sessions_mutex_);
    id = "s" + std::to_string(next_id_++);
    sessions_.emplace(id, session);
  }
  std::lock_guard lock(session->mutex);
  return {{"id", id}, {"state", wire::to_json(session->state)}};
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "UnknownSession", "no session \"" + id + "\"");
  return it->second;
}

json SessionService::get(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return wire::to_json(s->state);
}

json SessionService::move(const std::string& id, const json& body) {
  if (!body.is_object() || !body.contains("target")) throw ServiceError(400, "ParseError", "expected {\"target\": [x, y]}");
  const Point target = wire::point_from(body["target"]);
  const Scalar step = body.contains("step") ? wire::scalar_from(body["step"]) : kDefaultStep;
  if (step.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "step must be positive");

  auto s = find(id);
  std::lock_guard lock(s->mutex);
  SessionState& state = s->state;
  const Point from = state.beacon;
  json path = json::array({wire::to_json(from)});
  json trajectory = json::array();
  ClampedMove clamp{target, from, {}, target != from};
  if (!state.captured) {
    clamp = clamp_move(state.instance, from, target);
    const std::size_t before = state.log.size();
    advance(state, BeaconPath{clamp.waypoints}, step);
    for (const auto& w : clamp.waypoints) path.push_back(wire::to_json(w));
    for (std::size_t i = before; i < state.log.size(); ++i) {
      trajectory.push_back({{"beacon", wire::to_json(state.log[i].beacon)},
                            {"events", wire::to_json(state.log[i].trajectory)}});
    }
  }
  return {{"beacon_path", std::move(path)},
          {"ball_trajectory", std::move(trajectory)},
          {"clamp",
           {{"requested", wire::to_json(clamp.requested)},
            {"reached", wire::to_json(clamp.reached)},
            {"clamped", clamp.clamped}}},
          {"state", wire::to_json(state)}};
}

json SessionService::reset(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->state = SessionState::start(s->state.instance);
  return wire::to_json(s->state);
}

json SessionService::labels(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (!s->labels) {
    const Instance& inst = s->state.instance;
    if (!inst.polygon.grid_orthogonal()) {
      throw Error(ErrorCode::NotGridOrthogonal, "labels need a grid-orthogonal polygon");
    }
    ExploreOptions opt;
    opt.mode = inst.mode == BeaconMode::Free ? BeaconMode::BoundaryAndExterior : inst.mode;
    const ConfigGraph g = explore_bfs(inst.polygon, inst.ball, inst.beacon, opt);
    s->labels = wire::to_json(label_regions(inst.polygon, g));
  }
  return *s->labels;
}

void SessionService::mount(httplib::Server& server) {
  using httplib::Request;
  using httplib::Response;
  auto wrap = [](auto handler) {
    return [handler](const Request& req, Response& res) {
      try {
        res.set_content(handler(req).dump(), "application/json");
      } catch (const ServiceError& e) {
        res.status = e.status();
        res.set_content(error_body(e.code(), e.what()).dump(), "application/json");
      } catch (const Error& e) {
        res.status = status_for(e.code());
        res.set_content(error_body(to_string(e.code()), e.what()).dump(), "application/json");
      } catch (const json::exception& e) {
        res.status = 400;
        res.set_content(error_body("ParseError", e.what()).dump(), "application/json");
      }
    };
  };
  auto body = [](const Request& req) {
    try {
      return req.body.empty() ? json::object() : json::parse(req.body);
    } catch (const json::parse_error& e) {
      throw ServiceError(400, "ParseError", e.what());
    }
  };
  server.Get("/api/instances", wrap([this](const Request&) { return list_instances(); }));
  server.Post("/api/session", wrap([this, body](const Request& req) { return create(body(req)); }));
  server.Get("/api/session/:id", wrap([this](const Request& req) { return get(req.path_params.at("id")); }));
  server.Post("/api/session/:id/move",
              wrap([this, body](const Request& req) { return move(req.path_params.at("id"), body(req)); }));
  server.Post("/api/session/:id/reset", wrap([this](const Request& req) { return reset(req.path_params.at("id")); }));
  server.Get("/api/session/:id/labels", wrap([this](const Request& req) { return labels(req.path_params.at("id")); }));
}

void serve(SessionService& service, const std::string& host, int port, const std::string& static_dir) {
  httplib::Server server;
  service.mount(server);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    throw ServiceError(500, "StaticDir", "cannot serve " + static_dir);
  }
  if (!server.bind_to_port(host, port)) {
    throw ServiceError(500, "BindFailed", "cannot bind " + host + ":" + std::to_string(port));
  }
  server.listen_after_bind();
}

}  // namespace beacon
