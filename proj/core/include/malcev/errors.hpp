#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malcev {

/// Parse failure; carries the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(std::size_t position, const std::string& expected)
      : std::runtime_error("syntax error at position " + std::to_string(position) +
                           ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

class OutOfRangeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MissingAssignmentError : public std::runtime_error {
public:
  explicit MissingAssignmentError(unsigned generator)
      : std::runtime_error("no image assigned for generator x" + std::to_string(generator)),
        generator_(generator) {}
  unsigned generator() const noexcept { return generator_; }

private:
  unsigned generator_;
};

class DegreeTooSmallError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MixedMultidegreeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegenerateMultisetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotMultilinearError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class LimitExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Corrupt on-disk cache; carries the 1-based line number of the bad record.
class CacheParseError : public std::runtime_error {
public:
  CacheParseError(std::size_t line, const std::string& what)
      : std::runtime_error("cache line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace malcev
