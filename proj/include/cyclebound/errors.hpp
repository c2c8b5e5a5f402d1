#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cyclebound {

// Input text or JSON that does not describe a valid weighted graph.
// `line` is 1-based; 0 when no line information applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(0, what) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid input that violates an operation's precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance is larger than the configured exact-search limits.
// Results are exact or absent; a cap is never a silent approximation.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verified inequality failed on a concrete instance. This never fires on
// correct code; it carries the serialized instance so the event is
// reproducible.
class CounterexampleError : public std::runtime_error {
 public:
  CounterexampleError(const std::string& what, std::string instance_text)
      : std::runtime_error(what), instance_text_(std::move(instance_text)) {}

  const std::string& instance_text() const { return instance_text_; }

 private:
  std::string instance_text_;
};

}  // namespace cyclebound
