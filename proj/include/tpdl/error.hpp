#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpdl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntactic error; `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An atom, agent or point name that the model does not declare.
class UnknownIdentifier : public Error {
 public:
  using Error::Error;
};

/// A relation that does not satisfy the property of its declared frame kind.
class FrameError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed model or report file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpdl
