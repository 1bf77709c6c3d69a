#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "axiomforge/distance/oracle.hpp"

namespace axiomforge::proposer {

using distance::OracleUnavailable;

class AuthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleClientConfig {
  std::string base_url = "https://api.openai.com/v1";
  std::string model = "gpt-4o-mini-2024-07-18";
  std::string api_key_env = "AXIOMFORGE_API_KEY";
  double temperature = 1.0;
  std::size_t samples = 16;
  std::chrono::milliseconds timeout{60'000};
  std::size_t max_retries = 3;
  /// First retry waits this long; each further retry doubles it.
  std::chrono::milliseconds backoff_base{500};

  void check() const {
    if (samples == 0) throw std::invalid_argument("samples must be at least 1");
    if (timeout.count() <= 0) throw std::invalid_argument("timeout must be positive");
  }
};

struct HttpResponse {
  int status = 0;
  std::string body;
  /// Set when no HTTP response was received at all.
  std::string transport_error;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse post_json(const std::string& url, const std::string& bearer, const std::string& body,
                                 std::chrono::milliseconds timeout) = 0;
};

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse post_json(const std::string& url, const std::string& bearer, const std::string& body,
                         std::chrono::milliseconds timeout) override {
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    const std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    HttpResponse out;
    try {
      httplib::Client cli(origin);
      const auto secs = timeout.count() / 1000;
      const auto usecs = (timeout.count() % 1000) * 1000;
      cli.set_connection_timeout(secs, usecs);
      cli.set_read_timeout(secs, usecs);
      cli.set_write_timeout(secs, usecs);
      httplib::Headers headers{{"Authorization", "Bearer " + bearer}};
      auto res = cli.Post(path, headers, body, "application/json");
      if (!res) {
        out.transport_error = httplib::to_string(res.error());
        return out;
      }
      out.status = res->status;
      out.body = res->body;
    } catch (const std::exception& e) {
      out.transport_error = e.what();
    }
    return out;
  }
};

/// Counts requests passed through to another transport.
class CountingTransport : public HttpTransport {
 public:
  explicit CountingTransport(std::shared_ptr<HttpTransport> inner) : inner_(std::move(inner)) {}
  HttpResponse post_json(const std::string& url, const std::string& bearer, const std::string& body,
                         std::chrono::milliseconds timeout) override {
    ++count_;
    return inner_->post_json(url, bearer, body, timeout);
  }
  std::size_t count() const noexcept { return count_; }

 private:
  std::shared_ptr<HttpTransport> inner_;
  std::atomic<std::size_t> count_{0};
};

/// Minimal chat-completion client.
class ChatClient {
 public:
  ChatClient(OracleClientConfig cfg, std::shared_ptr<HttpTransport> transport = std::make_shared<HttplibTransport>())
      : cfg_(std::move(cfg)), transport_(std::move(transport)) {
    cfg_.check();
  }

  /// Returns the content of every choice. Throws AuthError without touching
  /// the network when the key is missing.
  std::vector<std::string> complete(const std::string& system, const std::string& user, std::size_t n) {
    const char* key = std::getenv(cfg_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') throw AuthError("environment variable " + cfg_.api_key_env + " is not set");

    nlohmann::json req{{"model", cfg_.model},
                       {"messages", nlohmann::json::array({{{"role", "system"}, {"content", system}},
                                                           {{"role", "user"}, {"content", user}}})},
                       {"temperature", cfg_.temperature},
                       {"n", n}};
    const std::string url = trim_slash(cfg_.base_url) + "/chat/completions";
    const std::string body = req.dump();

    std::string last_error;
    for (std::size_t attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
      if (attempt > 0) std::this_thread::sleep_for(cfg_.backoff_base * (1LL << (attempt - 1)));
      auto res = transport_->post_json(url, key, body, cfg_.timeout);
      if (!res.transport_error.empty()) {
        last_error = res.transport_error;
        continue;
      }
      if (res.status == 401 || res.status == 403)
        throw AuthError("endpoint rejected credentials (HTTP " + std::to_string(res.status) + ")");
      if (res.status >= 500 || res.status == 429) {
        last_error = "HTTP " + std::to_string(res.status);
        continue;
      }
      if (res.status < 200 || res.status >= 300)
        throw OracleUnavailable("HTTP " + std::to_string(res.status) + ": " + res.body.substr(0, 200));
      return parse_choices(res.body);
    }
    throw OracleUnavailable("giving up after " + std::to_string(cfg_.max_retries + 1) + " attempts: " + last_error);
  }

  const OracleClientConfig& config() const noexcept { return cfg_; }

 private:
  static std::string trim_slash(std::string s) {
    while (!s.empty() && s.back() == '/') s.pop_back();
    return s;
  }

  static std::vector<std::string> parse_choices(const std::string& body) {
    auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || !j["choices"].is_array())
      throw OracleUnavailable("malformed chat-completion response");
    std::vector<std::string> out;
    for (const auto& c : j["choices"]) {
      const auto* msg = c.contains("message") ? &c["message"] : nullptr;
      if (msg && msg->contains("content") && (*msg)["content"].is_string())
        out.push_back((*msg)["content"].get<std::string>());
    }
    return out;
  }

  OracleClientConfig cfg_;
  std::shared_ptr<HttpTransport> transport_;
};

}  // namespace axiomforge::proposer
