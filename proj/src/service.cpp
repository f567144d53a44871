#include "swingcmp/service.hpp"

#include <charconv>
#include <cmath>
#include <mutex>

#include <httplib.h>

#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

ApiResponse ok(const Json& body) { return {200, "application/json", canonical_json(body)}; }

constexpr std::string_view kFallbackIndex = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>swingcmp</title></head>
<body>
<h1>swingcmp session</h1>
<p>The browser viewer is not bundled with this server. The JSON API is available at:</p>
<ul>
<li><a href="/api/meta">/api/meta</a></li>
<li><a href="/api/signal">/api/signal</a></li>
<li><a href="/api/report">/api/report</a></li>
<li>/api/frame/{i}</li>
<li>POST /api/recompute {"threshold_k": k, "min_gap": n}</li>
</ul>
</body></html>
)";

}  // namespace

ApiResponse error_response(int status, ErrorCode code, const std::string& message,
                           const std::map<std::string, std::string>& context) {
  Json body = {{"code", std::string(error_code_name(code))}, {"message", message}, {"context", context}};
  return {status, "application/json", canonical_json(body)};
}

SessionService::SessionService(AnalysisReport report) : report_(std::move(report)) {}

void SessionService::set_frame_images(std::optional<std::vector<std::string>> user,
                                      std::optional<std::vector<std::string>> expert) {
  std::unique_lock lock(mutex_);
  user_images_ = std::move(user);
  expert_images_ = std::move(expert);
}

AnalysisReport SessionService::snapshot() const {
  std::shared_lock lock(mutex_);
  return report_;
}

ApiResponse SessionService::report() const {
  std::shared_lock lock(mutex_);
  return {200, "application/json", report_to_canonical_string(report_)};
}

ApiResponse SessionService::signal() const {
  std::shared_lock lock(mutex_);
  Json frames = Json::array();
  for (std::size_t i = 0; i < report_.sync.aligned_distance.size(); ++i) frames.push_back(i);
  Json body = {{"frames", frames},
               {"values", report_.sync.aligned_distance},
               {"threshold", report_.threshold},
               {"discrepancy", to_json(report_.discrepancy)}};
  return ok(body);
}

ApiResponse SessionService::frame(std::string_view index_text) const {
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
  if (ec != std::errc() || ptr != index_text.data() + index_text.size()) {
    return error_response(400, ErrorCode::BadRequest, "frame index must be a non-negative integer",
                          {{"index", std::string(index_text)}});
  }
  std::shared_lock lock(mutex_);
  if (index >= report_.comparisons.size()) {
    return error_response(404, ErrorCode::NotFound, "no such user frame",
                          {{"index", std::to_string(index)}, {"frame_count", std::to_string(report_.comparisons.size())}});
  }
  const auto& c = report_.comparisons[index];
  auto image = [](const std::optional<std::vector<std::string>>& images, std::size_t k) {
    return images && k < images->size() ? Json((*images)[k]) : Json(nullptr);
  };
  Json body = {{"comparison", to_json(c)},
               {"expert_frame", report_.sync.expert_for_user[index]},
               {"user_image", image(user_images_, index)},
               {"expert_image", image(expert_images_, report_.sync.expert_for_user[index])},
               {"session_max_joint_error", max_joint_error(report_)}};
  return ok(body);
}

ApiResponse SessionService::recompute(std::string_view body) {
  Json req;
  try {
    req = Json::parse(body);
  } catch (const Json::exception&) {
    return error_response(400, ErrorCode::BadRequest, "request body must be JSON");
  }
  if (!req.is_object()) return error_response(400, ErrorCode::BadRequest, "request body must be a JSON object");
  for (const auto& [key, value] : req.items()) {
    if (key != "threshold_k" && key != "min_gap") {
      return error_response(400, ErrorCode::BadRequest, "unknown field", {{"field", key}});
    }
  }
  std::optional<double> k;
  std::optional<std::size_t> gap;
  if (req.contains("threshold_k")) {
    if (!req["threshold_k"].is_number() || !std::isfinite(req["threshold_k"].get<double>())) {
      return error_response(400, ErrorCode::BadRequest, "threshold_k must be a finite number");
    }
    k = req["threshold_k"].get<double>();
  }
  if (req.contains("min_gap")) {
    if (!req["min_gap"].is_number_unsigned()) {
      return error_response(400, ErrorCode::BadRequest, "min_gap must be a non-negative integer");
    }
    gap = req["min_gap"].get<std::size_t>();
  }

  std::unique_lock lock(mutex_);
  try {
    recompute_discrepancy(report_, k.value_or(report_.config.threshold_k), gap.value_or(report_.config.min_gap));
  } catch (const Error& e) {
    return error_response(400, ErrorCode::BadRequest, e.what(), e.context());
  }
  Json out = {{"threshold", report_.threshold},
              {"threshold_k", report_.config.threshold_k},
              {"min_gap", report_.config.min_gap},
              {"discrepancy", to_json(report_.discrepancy)}};
  return ok(out);
}

ApiResponse SessionService::meta() const {
  std::shared_lock lock(mutex_);
  Json body = {{"versions", {{"schema", report_.schema_version}, {"tool", report_.tool_version}}},
               {"config", to_json(report_.config)},
               {"frame_count", report_.comparisons.size()}};
  return ok(body);
}

HttpServer::HttpServer(std::shared_ptr<SessionService> service, std::optional<std::filesystem::path> assets_dir)
    : service_(std::move(service)), server_(std::make_unique<httplib::Server>()) {
  auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  // SO_REUSEADDR without SO_REUSEPORT, so a port held by a live listener is refused.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  auto svc = service_;
  server_->Get("/api/report", [svc, send](const httplib::Request&, httplib::Response& res) { send(res, svc->report()); });
  server_->Get("/api/signal", [svc, send](const httplib::Request&, httplib::Response& res) { send(res, svc->signal()); });
  server_->Get("/api/meta", [svc, send](const httplib::Request&, httplib::Response& res) { send(res, svc->meta()); });
  server_->Get(R"(/api/frame/([^/]+))", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->frame(req.matches[1].str()));
  });
  server_->Post("/api/recompute", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->recompute(req.body));
  });

  bool mounted = false;
  if (assets_dir) mounted = server_->set_mount_point("/", assets_dir->string());
  if (!mounted) {
    server_->Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(std::string(kFallbackIndex), "text/html");
    });
  }

  server_->set_error_handler([send](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) {
      send(res, error_response(404, ErrorCode::NotFound, "no such endpoint", {{"path", req.path}}));
    } else {
      send(res, error_response(res.status, ErrorCode::BadRequest, "request failed", {{"path", req.path}}));
    }
  });
  server_->set_exception_handler([send](const httplib::Request& req, httplib::Response& res, std::exception_ptr ep) {
    std::string msg = "unexpected failure";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      msg = e.what();
    } catch (...) {
    }
    send(res, error_response(500, ErrorCode::Internal, msg, {{"path", req.path}}));
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::PortInUse, "could not bind any port", {{"host", host}});
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw Error(ErrorCode::PortInUse, "port is unavailable", {{"host", host}, {"port", std::to_string(port)}});
  }
  return port;
}

void HttpServer::listen() {
  {
    std::lock_guard lock(state_mutex_);
    if (stop_requested_) return;
    listening_ = true;
  }
  server_->listen_after_bind();
}

void HttpServer::stop() {
  bool listening = false;
  {
    std::lock_guard lock(state_mutex_);
    stop_requested_ = true;
    listening = listening_;
  }
  // httplib ignores stop() until its accept loop is running.
  if (listening) {
    server_->wait_until_ready();
    server_->stop();
  }
}

}  // namespace swingcmp
