#include <httplib.h>

#include "cotir/review.hpp"

namespace cotir::review {

using nlohmann::ordered_json;

namespace {

void send_json(httplib::Response& res, int status, const ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code, std::string_view message) {
  ordered_json e;
  e["code"] = code;
  e["message"] = message;
  send_json(res, status, e);
}

std::optional<std::string> param(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

// Maps service exceptions onto the {code, message} error body.
template <typename F>
void guarded(httplib::Response& res, std::string_view validation_code, F&& f) {
  try {
    f();
  } catch (const NotFoundError& e) {
    send_error(res, 404, "not_found", e.what());
  } catch (const ValidationError& e) {
    send_error(res, 400, validation_code, e.what());
  } catch (const nlohmann::json::exception& e) {
    send_error(res, 400, "bad_request", e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, "internal", e.what());
  }
}

}  // namespace

struct HttpServer::Impl {
  ReviewService& service;
  httplib::Server server;

  explicit Impl(ReviewService& s) : service(s) {}
};

HttpServer::HttpServer(ReviewService& service, const std::string& static_dir)
    : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  auto& svc = impl_->service;

  srv.Get("/health", [&svc](const httplib::Request&, httplib::Response& res) {
    guarded(res, "validation_error", [&] { send_json(res, 200, svc.health()); });
  });

  srv.Get("/findings", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, "invalid_filter", [&] {
      const auto q = parse_query(param(req, "doc"), param(req, "category"), param(req, "status"),
                                 param(req, "min_criticality"), param(req, "page"),
                                 param(req, "page_size"));
      send_json(res, 200, svc.list_findings(q));
    });
  });

  srv.Get(R"(/findings/([^/]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, "validation_error", [&] { send_json(res, 200, svc.get_finding(req.matches[1])); });
  });

  srv.Post("/decisions", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, "validation_error", [&] {
      auto body = nlohmann::json::parse(req.body);
      if (body.is_object() && (!body.contains("expert_id") || body["expert_id"].is_null()) &&
          req.has_header("X-Expert-Id")) {
        body["expert_id"] = req.get_header_value("X-Expert-Id");
      }
      send_json(res, 200, svc.post_decision(adjudication_from_json(body, false)));
    });
  });

  srv.Get("/export", [&svc](const httplib::Request&, httplib::Response& res) {
    guarded(res, "validation_error",
            [&] { res.set_content(report::dump(svc.snapshot()), "application/json"); });
  });

  if (!static_dir.empty()) {
    if (!srv.set_mount_point("/ui", static_dir)) {
      throw Error("static asset directory '" + static_dir + "' does not exist");
    }
    srv.Get("/", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/ui/"); });
  }

  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) send_error(res, res.status, "http_" + std::to_string(res.status), "no such route");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  auto& srv = impl_->server;
  const int bound = port == 0 ? srv.bind_to_any_port(host) : (srv.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace cotir::review
