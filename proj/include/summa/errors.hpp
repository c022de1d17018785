#pragma once

#include <stdexcept>
#include <string>

namespace summa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (range, length, domain).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An experiment configuration failed validation. `pointer` names the
/// offending field as a JSON pointer.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace summa
