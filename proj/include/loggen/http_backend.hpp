#pragma once

#include "loggen/backend.hpp"

#include <chrono>
#include <memory>
#include <string>
#include <thread>

namespace loggen {

struct HttpOptions {
    std::chrono::milliseconds timeout{5000};
    int retries = 1;  // extra attempts after a transient failure
};

/// Client for the JSON-over-HTTP protocol (POST /score, POST /generate).
/// Connection failures and 5xx responses are retried `retries` times, then
/// reported as BackendUnavailable. 4xx answers and malformed bodies are
/// ProtocolError.
class HttpBackend final : public Backend {
  public:
    explicit HttpBackend(std::string base_url, HttpOptions options = {});

    ScoreResponse score(const ScoreRequest& req) override;
    GenerateResponse generate(const GenerateRequest& req) override;
    std::string describe() const override { return base_url_; }

  private:
    nlohmann::json post(const std::string& path, const nlohmann::json& body);

    std::string base_url_;
    HttpOptions options_;
};

/// Serves any Backend over the HTTP protocol. Schema violations answer 400.
class BackendServer {
  public:
    explicit BackendServer(Backend& backend);
    ~BackendServer();

    BackendServer(const BackendServer&) = delete;
    BackendServer& operator=(const BackendServer&) = delete;

    /// Binds to an ephemeral port on `host` and serves on a background thread.
    int start(const std::string& host = "127.0.0.1");
    /// Blocks serving on `port`.
    bool listen(const std::string& host, int port);
    void stop();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
};

} // namespace loggen
