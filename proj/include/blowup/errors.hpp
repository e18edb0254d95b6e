#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blowup {

// An input violates an operation's stated parameter range or hypothesis.
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact-search budget, order cap, or feasibility guard would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 input; carries the byte offset of the first offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("graph6 parse error at byte " +
                           std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace blowup
