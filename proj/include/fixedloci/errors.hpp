// Error types shared across the library.
//
// input_error: the caller handed us data that violates a documented
// precondition (bad parse, non-central image, singular matrix, ...).
// resource_limit_error: the computation would exceed a configured bound
// (enumeration caps, isomorphism search bound).
#pragma once

#include <stdexcept>
#include <string>

namespace fixedloci {

struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw input_error(msg); }
[[noreturn]] inline void fail_limit(const std::string& msg) { throw resource_limit_error(msg); }

inline void require_input(bool cond, const std::string& msg) {
  if (!cond)
    fail_input(msg);
}

}  // namespace fixedloci
