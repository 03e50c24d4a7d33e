#pragma once

#include <stdexcept>
#include <string>

namespace twomilton {

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver was asked to work beyond its configured size limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that should hold was observed to fail. Carries a reproducer
/// payload (usually a JSON document) so the failure can be replayed.
class Falsification : public std::runtime_error {
 public:
  Falsification(const std::string& what, std::string reproducer)
      : std::runtime_error(what), reproducer_(std::move(reproducer)) {}

  const std::string& reproducer() const noexcept { return reproducer_; }

 private:
  std::string reproducer_;
};

}  // namespace twomilton
