#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvd {

/// Precondition violated by the caller (bad vertex id, invalid parameter).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact computation refused because the instance exceeds a size cap.
/// `size()` is the size of the offending instance or component.
class RefusalError : public std::runtime_error {
 public:
  RefusalError(std::size_t size, std::size_t cap, const std::string& what)
      : std::runtime_error(what + " (size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap) + ")"),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

}  // namespace mvd
