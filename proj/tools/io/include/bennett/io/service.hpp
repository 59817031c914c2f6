#pragma once

#include <functional>
#include <memory>
#include <string>

#include "bennett/io/commands.hpp"

namespace bennett::io {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON text
};

// Routes:
//   GET  /health             -> {"ok": true}
//   POST /synthesize/stroke  {"poses": [T0, T1, T2]}
//   POST /synthesize/fold    quadspec.json
//   POST /simulate           project object with inline mechanisms
// Domain errors answer 400, malformed requests 422, unknown routes 404.
HttpReply handle_request(const std::string& method, const std::string& path,
                         const std::string& body);

class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds and serves until stop(); port 0 picks a free port.
  // `on_bound` receives the port before requests are accepted.
  bool listen(const std::string& host, int port, const std::function<void(int)>& on_bound = {});
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bennett::io
