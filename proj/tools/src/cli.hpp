#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symplectica/matrix.hpp"

namespace symplectica::cli {

enum ExitCode {
  ok = 0,
  invalid_input = 2,
  nonphysical_beam = 3,
  degenerate_direction = 4,
  residual_too_large = 5,
};

struct BeamFile {
  int dof = 2;
  std::vector<double> matrix;  // row-major, order 2*dof
  bool from_components = false;

  int order() const { return 2 * dof; }
  template <std::size_t N>
  Mat<N> as() const {
    Mat<N> m;
    for (std::size_t k = 0; k < N * N; ++k) m.a[k] = matrix[k];
    return m;
  }
};

// Throws symplectica::Error(invalid_argument) on malformed input.
BeamFile parse_beam_file(const std::string& text);
std::string dump_beam_file(const BeamFile& f);

double residual_tolerance();  // SYMPLECTICA_TOL or 1e-6

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace symplectica::cli
