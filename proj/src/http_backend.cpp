#include "loggen/http_backend.hpp"

#include "loggen/error.hpp"

#include <httplib.h>

namespace loggen {

using nlohmann::json;

HttpBackend::HttpBackend(std::string base_url, HttpOptions options)
    : base_url_(std::move(base_url)), options_(options) {
    while (!base_url_.empty() && base_url_.back() == '/')
        base_url_.pop_back();
}

json HttpBackend::post(const std::string& path, const json& body) {
    const std::string payload = body.dump();
    std::string last_failure;
    for (int attempt = 0; attempt <= options_.retries; ++attempt) {
        // One client per call keeps concurrent requests independent.
        httplib::Client client(base_url_);
        client.set_connection_timeout(options_.timeout);
        client.set_read_timeout(options_.timeout);
        client.set_write_timeout(options_.timeout);
        auto res = client.Post(path, payload, "application/json");
        if (!res) {
            last_failure = httplib::to_string(res.error());
            continue;
        }
        if (res->status >= 500) {
            last_failure = "HTTP " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200)
            throw Error(ErrorCode::ProtocolError, base_url_ + path + " answered HTTP " +
                                                      std::to_string(res->status) + ": " +
                                                      res->body);
        try {
            return json::parse(res->body);
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::ProtocolError,
                        base_url_ + path + " returned malformed JSON: " + e.what());
        }
    }
    throw Error(ErrorCode::BackendUnavailable,
                "backend " + base_url_ + path + " unavailable: " + last_failure);
}

ScoreResponse HttpBackend::score(const ScoreRequest& req) {
    validate(req);
    auto resp = score_response_from_json(post("/score", to_json(req)));
    validate(resp, req);
    return resp;
}

GenerateResponse HttpBackend::generate(const GenerateRequest& req) {
    validate(req);
    auto resp = generate_response_from_json(post("/generate", to_json(req)));
    validate(resp, req);
    return resp;
}

struct BackendServer::Impl {
    Backend& backend;
    httplib::Server server;

    explicit Impl(Backend& b) : backend(b) {
        server.Post("/score", [this](const httplib::Request& rq, httplib::Response& rs) {
            handle(rq, rs, [this](const json& body) {
                auto req = score_request_from_json(body);
                validate(req);
                return to_json(backend.score(req));
            });
        });
        server.Post("/generate", [this](const httplib::Request& rq, httplib::Response& rs) {
            handle(rq, rs, [this](const json& body) {
                auto req = generate_request_from_json(body);
                validate(req);
                return to_json(backend.generate(req));
            });
        });
    }

    template <class Fn>
    static void handle(const httplib::Request& rq, httplib::Response& rs, Fn&& fn) {
        try {
            const json body = json::parse(rq.body);
            rs.set_content(fn(body).dump(), "application/json");
        } catch (const json::parse_error& e) {
            reject(rs, 400, "ProtocolError", e.what());
        } catch (const Error& e) {
            const bool client_fault = e.code() == ErrorCode::ProtocolError ||
                                      e.code() == ErrorCode::NoMask;
            reject(rs, client_fault ? 400 : 500, std::string(to_string(e.code())), e.what());
        } catch (const std::exception& e) {
            reject(rs, 500, "InternalError", e.what());
        }
    }

    static void reject(httplib::Response& rs, int status, const std::string& code,
                       const std::string& message) {
        rs.status = status;
        rs.set_content(json{{"error", code}, {"message", message}}.dump(), "application/json");
    }
};

BackendServer::BackendServer(Backend& backend) : impl_(std::make_unique<Impl>(backend)) {}

BackendServer::~BackendServer() { stop(); }

int BackendServer::start(const std::string& host) {
    const int port = impl_->server.bind_to_any_port(host);
    if (port < 0)
        throw Error(ErrorCode::IoError, "could not bind " + host);
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

bool BackendServer::listen(const std::string& host, int port) {
    return impl_->server.listen(host, port);
}

void BackendServer::stop() {
    impl_->server.stop();
    if (thread_.joinable())
        thread_.join();
}

} // namespace loggen
