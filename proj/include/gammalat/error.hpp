#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammalat {

enum class ErrorKind {
  MissingKappa,
  InvalidKappa,
  GuardExceeded,
  SpecMismatch,
  NotSquare,
  Singular,
  NonIncreasingIndices,
  DimensionMismatch,
  PoleArgument,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the kind identifies the failed
// precondition so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gammalat
