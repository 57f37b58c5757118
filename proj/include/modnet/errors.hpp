#pragma once

#include <stdexcept>
#include <string>

namespace modnet {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file content; carries the 1-based line number.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// A documented size cap was exceeded (subset enumeration, partition
/// enumeration, dense initialization).
class cap_error : public error {
public:
  using error::error;
};

/// File could not be opened or written.
class io_error : public error {
public:
  using error::error;
};

}  // namespace modnet
