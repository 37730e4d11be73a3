#include "symplectica/errors.hpp"

namespace symplectica {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::nonphysical: return "nonphysical-beam";
    case ErrorKind::degenerate_direction: return "degenerate-direction";
    case ErrorKind::degenerate_emittance: return "degenerate-emittance";
    case ErrorKind::degenerate_eigvec: return "degenerate-eigvec";
    case ErrorKind::singular_matrix: return "singular-matrix";
  }
  return "unknown";
}

}  // namespace symplectica
