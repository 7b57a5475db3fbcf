#pragma once

#include <stdexcept>
#include <string>

namespace conetop {

// Malformed or out-of-contract input: bad schema, dimension mismatch,
// unmet structural precondition.  CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Size guard tripped (index set or variable count too large).  Also exit 2.
class guard_exceeded : public invalid_input {
 public:
  explicit guard_exceeded(const std::string& what) : invalid_input(what) {}
};

// A cross-check that must hold by theorem came out false.  This signals a
// bug in the build, never a legal negative verdict.  CLI maps it to exit 3.
class inconsistency_error : public std::logic_error {
 public:
  explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace conetop
