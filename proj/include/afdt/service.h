#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "afdt/analysis.h"
#include "afdt/circuit.h"
#include "afdt/model.h"

namespace httplib {
class Server;
}

namespace afdt::service {

using Clock = std::function<std::chrono::steady_clock::time_point()>;

struct Config {
  std::size_t max_body = 1 << 20;
  std::chrono::seconds ttl{3600};
  std::string cors_origin;  // empty: no CORS header
  std::uint64_t max_mc_samples = 10'000'000;
  Limits limits = Limits::from_env();
};

/// An uploaded model; never mutated after creation.
struct Snapshot {
  Model model;
  Circuit circuit;
  LeafPartition leaves;
};

/// Token → snapshot map with idle expiry. Lookups hand out shared ownership,
/// so evicting an entry never invalidates a request already holding it.
class TokenStore {
 public:
  TokenStore(std::chrono::seconds ttl, Clock clock);

  std::string put(std::shared_ptr<const Snapshot> snapshot);
  /// Refreshes the idle timer; nullptr for unknown or expired tokens.
  std::shared_ptr<const Snapshot> get(const std::string& token);
  std::size_t size();

 private:
  struct Entry {
    std::shared_ptr<const Snapshot> snapshot;
    std::chrono::steady_clock::time_point last_used;
  };
  void evict_expired(std::chrono::steady_clock::time_point now);

  std::chrono::seconds ttl_;
  Clock clock_;
  std::mutex mu_;
  std::unordered_map<std::string, Entry> entries_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> params;
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// JSON-over-HTTP front end. handle() is transport independent; bind()
/// routes an httplib server to it.
///
///   POST /models                      DSL text or JSON model -> {token, leaves, violations}
///   GET  /models/{token}/mcs?defenses=a,b
///   GET  /models/{token}/impact
///   POST /models/{token}/evaluate     {active: [...]}
///   POST /models/{token}/probability  {probs, defenses?, mc?, seed?}
///   GET  /models/{token}/dot
class Service {
 public:
  explicit Service(Config config = {}, Clock clock = std::chrono::steady_clock::now);

  Response handle(const Request& req);
  void bind(httplib::Server& server);

  const Config& config() const { return config_; }
  TokenStore& store() { return store_; }

 private:
  Response upload(const Request& req);
  Response mcs(const Snapshot& s, const Request& req);
  Response impact(const Snapshot& s);
  Response evaluate(const Snapshot& s, const Request& req);
  Response probability(const Snapshot& s, const Request& req);
  Response dot(const Snapshot& s);

  Config config_;
  TokenStore store_;
};

}  // namespace afdt::service
