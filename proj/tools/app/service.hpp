#pragma once

#include <memory>
#include <string>

#include "requests.hpp"

namespace databus::app {

struct Response {
  int status = 200;
  std::string body;
};

/// Routes one GET request. Pure: identical inputs give identical bytes.
///   /api/health   {"status":"ok"}
///   /api/estimate estimate_json for the parse_estimate keys
///   /api/sweep    sweep_json; adds scale_min, scale_max, steps
///   /api/presets  the five comparison-table profiles
/// Bad input gives 400 with {"error", "field"}; any other path 404.
Response handle(const std::string& path, const Params& params);

/// HTTP front end over `handle`, on a thread pool.
class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  /// Throws std::runtime_error when binding fails.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind.
  void listen();
  /// Blocks until a concurrent listen() accepts connections.
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace databus::app
