#ifndef GRADED_ERRORS_HPP
#define GRADED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graded {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax. `offset` is the byte position in the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// A value violates a domain constraint (grade range, item ids, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An evaluation was asked for a variable it does not bind.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A search or enumeration would exceed its configured budget. Never
/// raised after partial work has been silently discarded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace graded

#endif  // GRADED_ERRORS_HPP
