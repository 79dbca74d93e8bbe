// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#include "addrtag/augment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "addrtag/error.hpp"
#include "addrtag/gazetteer.hpp"
#include "addrtag/generate.hpp"
#include "addrtag/util.hpp"

namespace addrtag {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string env_or(const char* name, const char* fallback) {
  const char* value = std::getenv(name);
  return value != nullptr ? value : fallback;
}

// Tiny name lists good enough to exercise single- and multi-word rendering.
const gazetteer& smoke_gazetteer() {
  static const gazetteer g = gazetteer::from_lists(
      {"Hlavná", "Nábrežie mládeže"}, {"Košice", "Spišská Nová Ves"});
  return g;
}

struct split_url {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

split_url parse_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw error("endpoint URL must include a scheme: " + url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

class live_transport : public http_transport {
 public:
  http_response post(const std::string& url,
                     const std::map<std::string, std::string>& headers,
                     const std::string& body) override {
    auto [origin, path] = parse_url(url);
    httplib::Client client(origin);
    client.set_connection_timeout(10);
    client.set_read_timeout(60);
    httplib::Headers hl;
    for (const auto& [k, v] : headers) hl.emplace(k, v);
    auto result = client.Post(path, hl, body, "application/json");
    if (!result) {
      throw error("HTTP request failed: " + httplib::to_string(result.error()));
    }
    return http_response{result->status, result->body};
  }
};

std::string build_request_body(const augment_request& request) {
  ordered_json body;
  body["model"] = request.model_name;
  ordered_json messages = ordered_json::array();
  messages.push_back(
      {{"role", "system"},
       {"content",
        "You write Slovak address sentence templates, one per line. Use the "
        "placeholders streetname, municipalityname, housenumber and postcode "
        "for address parts. Emit plain words only: no labels, no numbering, "
        "no quotes."}});
  messages.push_back(
      {{"role", "user"},
       {"content", "Write " + std::to_string(request.num_templates) +
                       " templates. " + request.pattern_description}});
  body["messages"] = messages;
  return body.dump();
}

std::string extract_content(const std::string& body) {
  json parsed;
  try {
    parsed = json::parse(body);
  } catch (const json::exception& e) {
    throw error(std::string("unparseable response body: ") + e.what());
  }
  if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
      parsed["choices"].empty()) {
    throw error("response has no choices");
  }
  const auto& first = parsed["choices"][0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string()) {
    throw error("response choice has no message content");
  }
  return first["message"]["content"].get<std::string>();
}

std::string iso8601_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void append_audit_record(const std::filesystem::path& path,
                         const std::string& original,
                         const std::string& corrected, bool accepted,
                         const std::string& note) {
  ordered_json record;
  record["original"] = original;
  record["corrected"] = corrected;
  record["accepted"] = accepted;
  if (!note.empty()) record["note"] = note;
  record["timestamp"] = iso8601_utc_now();
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw io_error("cannot open audit log", path.string());
  out << record.dump() << '\n';
  if (!out) throw io_error("write failure", path.string());
}

}  // namespace

augment_request augment_request::from_env() {
  augment_request request;
  request.endpoint = env_or("ADDRTAG_LLM_ENDPOINT", "");
  request.api_key = env_or("ADDRTAG_LLM_API_KEY", "");
  request.model_name = env_or("ADDRTAG_LLM_MODEL", "gpt-3.5-turbo");
  return request;
}

std::unique_ptr<http_transport> make_live_transport() {
  return std::make_unique<live_transport>();
}

void fixture_transport::enqueue(int status, std::string body) {
  std::lock_guard lock(mutex_);
  queue_.push_back({false, {}, {status, std::move(body)}});
}

void fixture_transport::enqueue_failure(std::string message) {
  std::lock_guard lock(mutex_);
  queue_.push_back({true, std::move(message), {}});
}

void fixture_transport::enqueue_from_file(const std::filesystem::path& path,
                                          int status) {
  enqueue(status, read_file(path));
}

http_response fixture_transport::post(
    const std::string& url, const std::map<std::string, std::string>& headers,
    const std::string& body) {
  (void)headers;
  std::lock_guard lock(mutex_);
  if (next_ >= queue_.size()) {
    throw error("fixture transport exhausted after " +
                std::to_string(queue_.size()) + " responses");
  }
  ++calls_;
  last_body_ = body;
  last_url_ = url;
  canned entry = queue_[next_++];
  if (entry.fail) throw error(entry.message);
  return entry.response;
}

std::size_t fixture_transport::calls() const {
  std::lock_guard lock(mutex_);
  return calls_;
}

std::string fixture_transport::last_body() const {
  std::lock_guard lock(mutex_);
  return last_body_;
}

std::string fixture_transport::last_url() const {
  std::lock_guard lock(mutex_);
  return last_url_;
}

std::optional<std::string> validate_template_line(std::string_view line) {
  sentence_template parsed;
  try {
    parsed = parse_template_line(line);
  } catch (const error& e) {
    return std::string(e.what());
  }
  // Smoke render: the template must produce a BIO-valid sentence.
  try {
    generation_config cfg;
    cfg.with_noise = true;
    rng r(1);
    render_template(parsed, smoke_gazetteer(), cfg, r,
                    builtin_noise_lexicon());
  } catch (const std::exception& e) {
    return std::string("smoke render failed: ") + e.what();
  }
  return std::nullopt;
}

augment_result parse_completion_body(const std::string& body) {
  augment_result result;
  result.raw_text = extract_content(body);
  std::size_t start = 0;
  const std::string& text = result.raw_text;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string line = nl == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, nl - start);
    start = nl == std::string::npos ? text.size() + 1 : nl + 1;
    if (trim(line).empty()) continue;
    if (auto reason = validate_template_line(line)) {
      result.rejected.push_back(rejected_line{line, *reason});
    } else {
      result.templates.push_back(parse_template_line(line));
    }
  }
  return result;
}

augment_result request_templates(const augment_request& request,
                                 http_transport& transport,
                                 const retry_policy& retry) {
  if (request.endpoint.empty()) throw error("endpoint not configured");
  if (request.num_templates < 1 ||
      request.num_templates > max_templates_per_call) {
    throw error("num_templates must be in 1.." +
                std::to_string(max_templates_per_call));
  }
  std::map<std::string, std::string> headers;
  if (!request.api_key.empty()) {
    headers["Authorization"] = "Bearer " + request.api_key;
  }
  std::string body = build_request_body(request);

  std::string last_failure;
  auto backoff = retry.initial_backoff;
  for (int attempt = 1; attempt <= retry.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    http_response response;
    try {
      response = transport.post(request.endpoint, headers, body);
    } catch (const error& e) {
      last_failure = e.what();
      continue;
    }
    if (response.status < 200 || response.status >= 300) {
      last_failure = "HTTP status " + std::to_string(response.status);
      continue;
    }
    return parse_completion_body(response.body);
  }
  throw error("request failed after " + std::to_string(retry.max_attempts) +
              " attempts: " + last_failure);
}

std::vector<augment_result> request_templates_batch(
    std::span<const augment_request> requests, http_transport& transport,
    std::size_t max_concurrency, const retry_policy& retry) {
  if (max_concurrency == 0) max_concurrency = 1;
  std::vector<augment_result> results(requests.size());
  std::vector<std::string> failures(requests.size());
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= requests.size()) break;
      try {
        results[i] = request_templates(requests[i], transport, retry);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  std::size_t n = std::min(max_concurrency, requests.size());
  threads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i].empty()) {
      throw error("batch request " + std::to_string(i) +
                  " failed: " + failures[i]);
    }
  }
  return results;
}

review_outcome review_queue(const augment_result& result,
                            std::span<const correction> corrections,
                            const std::filesystem::path& bank_path,
                            int pattern_id,
                            const std::filesystem::path& audit_log_path) {
  review_outcome outcome;
  template_bank bank;
  if (std::filesystem::exists(bank_path)) {
    bank = template_bank::load(bank_path);
  }

  auto admit = [&](const sentence_template& t, const std::string& original,
                   const std::string& corrected) {
    if (bank.contains(pattern_id, t)) {
      ++outcome.duplicates_dropped;
      append_audit_record(audit_log_path, original, corrected, false,
                          "duplicate of existing bank template");
      return;
    }
    append_bank_record(bank_path, pattern_id, t);
    bank.add(pattern_id, t);
    outcome.accepted.push_back(t);
    append_audit_record(audit_log_path, original, corrected, true, "");
  };

  for (const auto& t : result.templates) {
    std::string line = template_to_line(t);
    admit(t, line, line);
  }
  for (const auto& rejected : result.rejected) {
    auto fix = std::find_if(corrections.begin(), corrections.end(),
                            [&](const correction& c) {
                              return c.original == rejected.line;
                            });
    if (fix == corrections.end()) {
      outcome.still_rejected.push_back(rejected);
      continue;
    }
    if (auto reason = validate_template_line(fix->corrected)) {
      outcome.still_rejected.push_back(
          rejected_line{rejected.line, "correction invalid: " + *reason});
      append_audit_record(audit_log_path, rejected.line, fix->corrected, false,
                          *reason);
      continue;
    }
    admit(parse_template_line(fix->corrected), rejected.line, fix->corrected);
  }
  return outcome;
}

}  // namespace addrtag
