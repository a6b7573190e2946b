#pragma once

#include <stdexcept>
#include <string>

namespace trinom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (e.g. log of a nonpositive number).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation needed more than the allowed exponent range, precision, or effort.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Newton iteration failed to contract where a certificate said it would.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace trinom
