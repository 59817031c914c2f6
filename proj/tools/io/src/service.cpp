#include "bennett/io/service.hpp"

#include <httplib.h>

#include "bennett/error.hpp"

namespace bennett::io {

namespace {

HttpReply reply(int status, const json& j) { return {status, dump(j)}; }

HttpReply dispatch(const std::string& path, const json& req) {
  if (path == "/synthesize/stroke") {
    const json& p = field(req, "poses");
    if (!p.is_array() || p.size() != 3) {
      throw Error(ErrorCode::SchemaViolation, "poses must hold three poses");
    }
    const StrokeSynthesis s =
        synthesize_stroke({pose_from_json(p[0]), pose_from_json(p[1]), pose_from_json(p[2])});
    return reply(200, {{"mechanism", s.mechanism}, {"report", s.report}});
  }
  if (path == "/synthesize/fold") {
    const FoldSynthesis f = synthesize_fold(quadspec_from_json(req));
    return reply(200, {{"alpha1_deg", f.report["alpha1_deg"]},
                       {"mechanism", f.mechanism},
                       {"configurations", f.configurations},
                       {"report", f.report}});
  }
  if (path == "/simulate") {
    const ProjectConfig cfg = parse_project(req);
    const Simulation sim = simulate(build_assembly(cfg), cfg.samples);
    return reply(200, {{"summary", sim.summary}, {"trajectory_csv", sim.csv}});
  }
  return reply(404, {{"error", "not-found"}, {"message", "unknown route " + path}});
}

}  // namespace

HttpReply handle_request(const std::string& method, const std::string& path,
                         const std::string& body) {
  const bool post_route =
      path == "/synthesize/stroke" || path == "/synthesize/fold" || path == "/simulate";
  if (path == "/health" && method == "GET") return reply(200, {{"ok", true}});
  if (!post_route && path != "/health") {
    return reply(404, {{"error", "not-found"}, {"message", "unknown route " + path}});
  }
  if (!post_route || method != "POST") {
    return reply(405, {{"error", "method-not-allowed"}, {"message", method + " " + path}});
  }
  try {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::parse_error& e) {
      return reply(422, {{"error", "schema-violation"}, {"message", e.what()}});
    }
    return dispatch(path, req);
  } catch (const Error& e) {
    return reply(e.code() == ErrorCode::SchemaViolation ? 422 : 400, error_json(e));
  } catch (const std::exception& e) {
    return reply(500, {{"error", "internal"}, {"message", e.what()}});
  }
}

struct Service::Impl {
  httplib::Server server;
};

Service::Service() : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  const auto forward = [](const httplib::Request& req, httplib::Response& res) {
    const HttpReply r = handle_request(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  srv.Get(R"(.*)", forward);
  srv.Post(R"(.*)", forward);
}

Service::~Service() { stop(); }

bool Service::listen(const std::string& host, int port, const std::function<void(int)>& on_bound) {
  auto& srv = impl_->server;
  const int bound = port == 0 ? srv.bind_to_any_port(host) : (srv.bind_to_port(host, port) ? port : -1);
  if (bound < 0) return false;
  if (on_bound) on_bound(bound);
  return srv.listen_after_bind();
}

void Service::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace bennett::io
