// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace addrtag {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid data (BIO violations, bad tokens, misaligned corpora).
// `index` is the offending position: a token index for sequence errors.
class validation_error : public error {
 public:
  validation_error(const std::string& message, std::size_t index)
      : error(message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// File problems. `line` is 1-based; 0 means not line-specific.
class io_error : public error {
 public:
  io_error(const std::string& message, std::string path, std::size_t line = 0)
      : error(message), path_(std::move(path)), line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

class model_format_error : public error {
 public:
  enum class kind { corrupt, version_mismatch };

  model_format_error(const std::string& message, kind k)
      : error(message), kind_(k) {}

  kind which() const noexcept { return kind_; }

 private:
  kind kind_;
};

}  // namespace addrtag
