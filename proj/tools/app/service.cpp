#include "service.hpp"

#include <httplib.h>

#include "databus/report_io.hpp"

namespace databus::app {

namespace {

Response error(int status, const std::string& field, const std::string& message) {
  return {status, Json{{"error", message}, {"field", field}}.dump()};
}

}  // namespace

Response handle(const std::string& path, const Params& params) {
  try {
    if (path == "/api/health") return {200, Json{{"status", "ok"}}.dump()};
    if (path == "/api/presets") return {200, presets_json().dump()};
    if (path == "/api/estimate") {
      const auto req = parse_estimate(params);
      return {200, estimate_json(req.profile, estimate(req.profile, req.options)).dump()};
    }
    if (path == "/api/sweep") {
      const auto req = parse_sweep(params);
      const auto result =
          sweep(req.base.profile, req.scale_min, req.scale_max, req.steps, req.base.options);
      return {200, sweep_json(req.base.profile, result).dump()};
    }
  } catch (const FieldError& e) {
    return error(400, e.field(), e.message());
  } catch (const std::domain_error& e) {
    return error(400, "profile", e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, "profile", e.what());
  }
  return error(404, "path", "no such endpoint: " + path);
}

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  // httplib defaults to SO_REUSEPORT, which lets a second instance share the
  // port silently. Keep SO_REUSEADDR only so a taken port fails to bind.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  impl_->http.Get(".*", [](const httplib::Request& req, httplib::Response& res) {
    Params params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);  // first value wins
    const auto r = handle(req.path, params);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->http.bind_to_any_port(host)
                              : (impl_->http.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

void Server::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

}  // namespace databus::app
