// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addrtag/templates.hpp"

namespace addrtag {

// Chat-completion request for fresh placeholder templates. Endpoint and
// model come from configuration, never from code.
struct augment_request {
  std::string pattern_description;
  int num_templates = 10;  // capped at 100 per call
  std::string model_name;
  std::string endpoint;  // full URL, e.g. http://host:port/v1/chat/completions
  std::string api_key;

  // ADDRTAG_LLM_ENDPOINT, ADDRTAG_LLM_API_KEY, ADDRTAG_LLM_MODEL.
  static augment_request from_env();
};

inline constexpr int max_templates_per_call = 100;

struct rejected_line {
  std::string line;
  std::string reason;

  bool operator==(const rejected_line&) const = default;
};

struct augment_result {
  std::string raw_text;
  std::vector<sentence_template> templates;
  std::vector<rejected_line> rejected;
};

struct http_response {
  int status = 0;
  std::string body;
};

// Transport seam: live HTTP or canned fixtures.
class http_transport {
 public:
  virtual ~http_transport() = default;
  // Throws addrtag::error on connection-level failure.
  virtual http_response post(const std::string& url,
                             const std::map<std::string, std::string>& headers,
                             const std::string& body) = 0;
};

std::unique_ptr<http_transport> make_live_transport();

// Replays one canned body per call, in order; exhausting the queue throws.
// Safe to share between the batch workers.
class fixture_transport : public http_transport {
 public:
  void enqueue(int status, std::string body);
  void enqueue_failure(std::string message);
  void enqueue_from_file(const std::filesystem::path& path, int status = 200);

  http_response post(const std::string& url,
                     const std::map<std::string, std::string>& headers,
                     const std::string& body) override;

  std::size_t calls() const;
  std::string last_body() const;
  std::string last_url() const;

 private:
  struct canned {
    bool fail = false;
    std::string message;
    http_response response;
  };
  mutable std::mutex mutex_;
  std::vector<canned> queue_;
  std::size_t next_ = 0;
  std::size_t calls_ = 0;
  std::string last_body_;
  std::string last_url_;
};

struct retry_policy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{250};  // doubles per attempt
};

// One chat-completion round trip: build the prompt, post it (with retries
// and exponential backoff on transport errors and non-2xx statuses), then
// parse each response line through the template grammar and a BIO smoke
// render. Bad lines land in `rejected` with a reason.
augment_result request_templates(const augment_request& request,
                                 http_transport& transport,
                                 const retry_policy& retry = {});

// Same as request_templates for several requests, at most `max_concurrency`
// in flight at once; results come back in request order.
std::vector<augment_result> request_templates_batch(
    std::span<const augment_request> requests, http_transport& transport,
    std::size_t max_concurrency = 4, const retry_policy& retry = {});

// Parse/validate path alone, for replaying recorded completion bodies.
augment_result parse_completion_body(const std::string& body);

// Grammar + BIO smoke-render check used for everything that may enter the
// template bank. Returns the rejection reason, or nullopt when valid.
std::optional<std::string> validate_template_line(std::string_view line);

struct correction {
  std::string original;   // raw rejected line
  std::string corrected;  // replacement text
};

struct review_outcome {
  std::vector<sentence_template> accepted;
  std::vector<rejected_line> still_rejected;
  std::size_t duplicates_dropped = 0;
};

// Manual-correction workflow: valid parsed templates plus corrected lines
// that now validate are appended to the bank under `pattern_id`; duplicates
// of existing bank entries are dropped; every decision is recorded in the
// append-only JSONL audit log.
review_outcome review_queue(const augment_result& result,
                            std::span<const correction> corrections,
                            const std::filesystem::path& bank_path,
                            int pattern_id,
                            const std::filesystem::path& audit_log_path);

}  // namespace addrtag
