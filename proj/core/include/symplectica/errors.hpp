#pragma once

#include <stdexcept>
#include <string>

namespace symplectica {

enum class ErrorKind {
  invalid_argument,
  nonphysical,
  degenerate_direction,
  degenerate_emittance,
  degenerate_eigvec,
  singular_matrix,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symplectica
