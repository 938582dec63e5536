#pragma once

// Quasipolarity of full 2x2 matrices over a commutative local ring R. A is quasipolar
// exactly when one of the following holds:
//   - det A is a unit (A invertible, p = 0),
//   - det A and tr A are in J(R) (A quasinilpotent, p = I),
//   - det A in J(R), tr A a unit, and t^2 - tr t + det has roots alpha in J(R), beta in U(R);
//     then p = (beta - alpha)^-1 (beta I - A) is the spectral idempotent with A p = alpha p.

#include <optional>
#include <string>
#include <utility>

#include "qp/matrix.hpp"
#include "qp/witness.hpp"

namespace qp {

enum class M2Variant { Invertible, Quasinilpotent, Split, NotQuasipolar };

std::string_view to_string(M2Variant v);

struct M2Class {
    M2Variant variant;
    QuadraticCharPoly chi;  // roots filled in for Split
    std::string reason;     // why NotQuasipolar, empty otherwise
};

/// Roots (alpha in J, beta in U) of t^2 - tr t + det. Requires det in J and tr a unit
/// (PreconditionViolation otherwise). Modular rings are scanned exhaustively, Zloc uses
/// the rational quadratic formula with a denominator test, series rings split the
/// constant term and lift it.
std::optional<std::pair<RingElement, RingElement>> find_root_split(const QuadraticCharPoly& chi);

M2Class classify_m2(const ShapedMatrix& a);

/// p = c0 I + c1 A with c0 = beta (beta - alpha)^-1 and c1 = -(beta - alpha)^-1.
struct SpectralProjector {
    RingElement c0;
    RingElement c1;
    ShapedMatrix p;
};

SpectralProjector split_projector(const ShapedMatrix& a, const RingElement& alpha, const RingElement& beta);

/// Throws NotQuasipolar when classify_m2 says so.
QuasipolarWitness quasipolar_witness_m2(const ShapedMatrix& a);

}  // namespace qp
