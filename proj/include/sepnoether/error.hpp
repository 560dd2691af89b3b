#pragma once

#include <stdexcept>
#include <string>

namespace sepnoether {

enum class ErrorKind {
  Parse,        // malformed text input
  CapExceeded,  // configured search / enumeration cap hit
  InvalidInput, // violated precondition (not zero-sum, wrong dimension, ...)
  Overflow,     // exact arithmetic left the int64 range
  Internal,     // should be unreachable; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sepnoether
