#pragma once

#include <stdexcept>
#include <string>

namespace fdikit {

// Invalid input: malformed models, bad configs, inconsistent shapes.
// The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Failure while executing an otherwise valid request (diverged training,
// non-finite state, missing files). The CLI maps this to exit code 2.
class runtime_failure : public std::runtime_error {
  public:
    explicit runtime_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdikit
