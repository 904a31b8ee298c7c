#pragma once

#include <stdexcept>
#include <string>

namespace mixcay {

enum class ErrorKind {
  invalid_input,
  validation,
  capacity,
  not_strong,
  invalid_fragment,
  parse,
};

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace mixcay
