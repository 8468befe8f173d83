// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tacsearch {

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Positioned error from any of the text front ends (terms, scripts, db
// files, corpus files). line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A script that parses but cannot be run as written (THENL arity).
class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFragment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an engine invariant (replay gate, fairness audit, ...) fails.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tacsearch
