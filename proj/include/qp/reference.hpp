#pragma once

// Two reference 2x2 matrices over truncated power series rings with Z/4 coefficients.

#include <vector>

#include "qp/matrix.hpp"

namespace qp::reference {

/// Coefficients 0, 1 + 3, 1 + 3^2, ..., 1 + 3^(m-1) of sum_{n>=1} (1 + 3^n) x^n over `base`.
std::vector<RingElement> geometric_tail(const LocalRing& base, unsigned m);

/// [0, -s; 1, 3 - s] over series(Z2^2, m), with s the geometric tail.
ShapedMatrix geometric_tail_matrix(unsigned m);

/// [3, 2 + 2x; 2 + x, 2 + 3x] over series(Z2^2, 2).
ShapedMatrix linear_perturbation_matrix();

}  // namespace qp::reference
