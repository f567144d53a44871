#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "swingcmp/error.hpp"
#include "swingcmp/pipeline.hpp"

namespace httplib {
class Server;
}

namespace swingcmp {

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Holds one analyzed session and answers the JSON API. Transport-agnostic so
// every endpoint can be exercised without a socket; HttpServer binds it to
// HTTP. Reads run concurrently, recomputes are serialized.
class SessionService {
 public:
  explicit SessionService(AnalysisReport report);

  // GET /api/report
  ApiResponse report() const;
  // GET /api/signal
  ApiResponse signal() const;
  // GET /api/frame/{i}; `index_text` is the raw path segment
  ApiResponse frame(std::string_view index_text) const;
  // POST /api/recompute
  ApiResponse recompute(std::string_view body);
  // GET /api/meta
  ApiResponse meta() const;

  // Optional image locators from the loaded pose files.
  void set_frame_images(std::optional<std::vector<std::string>> user, std::optional<std::vector<std::string>> expert);

  AnalysisReport snapshot() const;

 private:
  mutable std::shared_mutex mutex_;
  AnalysisReport report_;
  std::optional<std::vector<std::string>> user_images_;
  std::optional<std::vector<std::string>> expert_images_;
};

// {code, message, context}
ApiResponse error_response(int status, ErrorCode code, const std::string& message,
                           const std::map<std::string, std::string>& context = {});

class HttpServer {
 public:
  // assets_dir, when set, is served at "/"; otherwise a minimal page is.
  HttpServer(std::shared_ptr<SessionService> service, std::optional<std::filesystem::path> assets_dir = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds host:port (port 0 picks a free port) and returns the bound port.
  // Throws PortInUse.
  int bind(const std::string& host, int port);
  // Blocks until stop(). Returns at once if stop() came first.
  void listen();
  // Safe to call from any thread, before or during listen().
  void stop();

 private:
  std::shared_ptr<SessionService> service_;
  std::unique_ptr<httplib::Server> server_;
  std::mutex state_mutex_;
  bool listening_ = false;
  bool stop_requested_ = false;
};

}  // namespace swingcmp
