#include "afdt/service.h"

#include <httplib.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "afdt/dot.h"
#include "afdt/dsl.h"
#include "afdt/json_io.h"
#include "afdt/quant.h"
#include "afdt/report.h"
#include "afdt/validate.h"

namespace afdt::service {

using nlohmann::json;

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Response json_response(int status, const json& body) { return {status, "application/json", body.dump()}; }

Response error_response(int status, std::string_view code, const std::string& message, const std::string& subject = "") {
  json body = {{"error", std::string(code)}, {"message", message}};
  if (!subject.empty()) body["subject"] = subject;
  return json_response(status, body);
}

/// Caps and oversize inputs are 422; everything else is a bad payload.
Response from_error(const Error& e) {
  const bool cap = e.code() == ErrorCode::kTooLarge || e.code() == ErrorCode::kTooManyDefenses ||
                   e.code() == ErrorCode::kBudgetExceeded;
  return error_response(cap ? 422 : 400, error_code_name(e.code()), e.what(), e.subject());
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> string_list(const json& body, const char* key) {
  std::vector<std::string> out;
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return out;
  if (!it->is_array()) throw std::invalid_argument(std::string("'") + key + "' must be an array of ids");
  for (const auto& v : *it) {
    if (!v.is_string()) throw std::invalid_argument(std::string("'") + key + "' must be an array of ids");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::optional<json> parse_object(const std::string& body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  return doc;
}

}  // namespace

TokenStore::TokenStore(std::chrono::seconds ttl, Clock clock)
    : ttl_(ttl), clock_(std::move(clock)), salt_(std::random_device{}() ^ (std::uint64_t(std::random_device{}()) << 32)) {}

std::string TokenStore::put(std::shared_ptr<const Snapshot> snapshot) {
  std::lock_guard lock(mu_);
  const auto now = clock_();
  evict_expired(now);
  ++counter_;
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(mix(salt_ ^ counter_)),
                static_cast<unsigned long long>(mix(mix(salt_) + counter_)));
  entries_[buf] = {std::move(snapshot), now};
  return buf;
}

std::shared_ptr<const Snapshot> TokenStore::get(const std::string& token) {
  std::lock_guard lock(mu_);
  const auto now = clock_();
  evict_expired(now);
  auto it = entries_.find(token);
  if (it == entries_.end()) return nullptr;
  it->second.last_used = now;
  return it->second.snapshot;
}

std::size_t TokenStore::size() {
  std::lock_guard lock(mu_);
  evict_expired(clock_());
  return entries_.size();
}

void TokenStore::evict_expired(std::chrono::steady_clock::time_point now) {
  std::erase_if(entries_, [&](const auto& kv) { return now - kv.second.last_used >= ttl_; });
}

Service::Service(Config config, Clock clock) : config_(std::move(config)), store_(config_.ttl, std::move(clock)) {}

Response Service::handle(const Request& req) {
  if (req.body.size() > config_.max_body)
    return error_response(413, "PAYLOAD_TOO_LARGE", "request body exceeds " + std::to_string(config_.max_body) + " bytes");

  if (req.path == "/models") {
    if (req.method != "POST") return error_response(405, "METHOD_NOT_ALLOWED", "use POST /models");
    return upload(req);
  }

  // /models/{token}/{action}
  const std::string prefix = "/models/";
  if (req.path.rfind(prefix, 0) != 0) return error_response(404, "NOT_FOUND", "no such endpoint");
  const std::string rest = req.path.substr(prefix.size());
  const auto slash = rest.find('/');
  if (slash == std::string::npos) return error_response(404, "NOT_FOUND", "no such endpoint");
  const std::string token = rest.substr(0, slash);
  const std::string action = rest.substr(slash + 1);

  struct Route {
    const char* action;
    const char* method;
  };
  static constexpr Route kRoutes[] = {{"mcs", "GET"},       {"impact", "GET"},      {"dot", "GET"},
                                      {"evaluate", "POST"}, {"probability", "POST"}};
  const Route* route = nullptr;
  for (const auto& r : kRoutes)
    if (action == r.action) route = &r;
  if (!route) return error_response(404, "NOT_FOUND", "no such endpoint");
  if (req.method != route->method)
    return error_response(405, "METHOD_NOT_ALLOWED", std::string("use ") + route->method);

  // The snapshot stays alive for the whole request even if it expires meanwhile.
  std::shared_ptr<const Snapshot> snapshot = store_.get(token);
  if (!snapshot) return error_response(404, "UNKNOWN_TOKEN", "unknown or expired model token", token);

  try {
    if (action == "mcs") return mcs(*snapshot, req);
    if (action == "impact") return impact(*snapshot);
    if (action == "dot") return dot(*snapshot);
    if (action == "evaluate") return evaluate(*snapshot, req);
    return probability(*snapshot, req);
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::invalid_argument& e) {
    return error_response(400, "BAD_REQUEST", e.what());
  }
}

Response Service::upload(const Request& req) {
  std::size_t first = req.body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return error_response(400, "BAD_REQUEST", "empty body");

  Model model;
  if (req.body[first] == '{') {
    json doc = json::parse(req.body, nullptr, false);
    if (doc.is_discarded()) return error_response(400, "BAD_REQUEST", "body is not valid JSON");
    try {
      model = json_io::from_json(doc);
    } catch (const Error& e) {
      return json_response(422, {{"error", "SCHEMA_ERROR"}, {"path", e.subject()}, {"message", e.what()}});
    }
  } else {
    auto parsed = dsl::parse(req.body);
    if (!parsed.ok()) {
      json errors = json::array();
      for (const auto& e : parsed.errors)
        errors.push_back({{"line", e.span.line},
                          {"column", e.span.column},
                          {"length", e.span.length},
                          {"code", std::string(dsl::parse_code_name(e.code))},
                          {"message", e.message}});
      return json_response(422, {{"parse_errors", errors}, {"violations", json::array()}});
    }
    model = std::move(*parsed.model);
  }

  auto violations = validate(model);
  if (!violations.empty())
    return json_response(422, {{"violations", report::to_json(violations)}});

  auto circuit = Circuit::compile(model);
  auto parts = leaves(model);
  json body = {{"leaves", report::to_json(parts)}, {"violations", json::array()}};
  body["token"] = store_.put(std::make_shared<const Snapshot>(Snapshot{std::move(model), std::move(circuit), parts}));
  return json_response(201, body);
}

Response Service::mcs(const Snapshot& s, const Request& req) {
  std::vector<std::string> defenses;
  if (auto it = req.params.find("defenses"); it != req.params.end()) defenses = split_ids(it->second);
  return json_response(200, report::to_json(minimal_cut_sets(s.circuit, defenses, config_.limits)));
}

Response Service::impact(const Snapshot& s) {
  return json_response(200, report::to_json(defense_impact(s.circuit, config_.limits)));
}

Response Service::evaluate(const Snapshot& s, const Request& req) {
  auto body = parse_object(req.body);
  if (!body) return error_response(400, "BAD_REQUEST", "expected a JSON object");
  return json_response(200, {{"tle", afdt::evaluate(s.circuit, string_list(*body, "active"))}});
}

Response Service::probability(const Snapshot& s, const Request& req) {
  auto body = parse_object(req.body);
  if (!body) return error_response(400, "BAD_REQUEST", "expected a JSON object");
  auto probs_it = body->find("probs");
  if (probs_it == body->end() || !probs_it->is_object())
    return error_response(400, "BAD_REQUEST", "'probs' must be an object of leaf probabilities");
  ProbAssignment probs;
  for (const auto& [id, p] : probs_it->items()) {
    if (!p.is_number()) return error_response(400, "BAD_PROB", "probability of '" + id + "' is not a number", id);
    probs[id] = p.get<double>();
  }
  const auto defenses = string_list(*body, "defenses");

  auto mc = body->find("mc");
  if (mc == body->end() || mc->is_null())
    return json_response(200, report::to_json(tle_probability_exact(s.circuit, probs, defenses, config_.limits)));

  if (!mc->is_number_unsigned() || mc->get<std::uint64_t>() == 0)
    return error_response(400, "BAD_REQUEST", "'mc' must be a positive sample count");
  const auto samples = mc->get<std::uint64_t>();
  if (samples > config_.max_mc_samples)
    return error_response(422, "TOO_LARGE", "at most " + std::to_string(config_.max_mc_samples) + " samples");
  std::uint64_t seed = 1;
  if (auto it = body->find("seed"); it != body->end() && !it->is_null()) {
    if (!it->is_number_unsigned()) return error_response(400, "BAD_REQUEST", "'seed' must be a non-negative integer");
    seed = it->get<std::uint64_t>();
  }
  return json_response(200, report::to_json(tle_probability_mc(s.circuit, probs, defenses, samples, seed)));
}

Response Service::dot(const Snapshot& s) { return {200, "text/vnd.graphviz", dot::to_dot(s.model)}; }

void Service::bind(httplib::Server& server) {
  server.set_payload_max_length(config_.max_body);
  auto forward = [this](const httplib::Request& hreq, httplib::Response& hres) {
    Request req{hreq.method, hreq.path, {}, hreq.body};
    for (const auto& [k, v] : hreq.params) req.params[k] = v;
    Response res = handle(req);
    hres.status = res.status;
    hres.set_content(res.body, res.content_type);
    if (!config_.cors_origin.empty()) hres.set_header("Access-Control-Allow-Origin", config_.cors_origin);
  };
  server.Post("/models", forward);
  server.Get(R"(/models/([^/]+)/(mcs|impact|dot))", forward);
  server.Post(R"(/models/([^/]+)/(evaluate|probability))", forward);
  server.Options(R"(/models.*)", [this](const httplib::Request&, httplib::Response& hres) {
    if (!config_.cors_origin.empty()) {
      hres.set_header("Access-Control-Allow-Origin", config_.cors_origin);
      hres.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      hres.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
    hres.status = 204;
  });
}

}  // namespace afdt::service
