#pragma once

// One entry point per question, choosing the constructive engine by shape and ring, and
// the verification layer that pairs the structural invariants with oracle checks.

#include <optional>

#include "qp/oracle.hpp"
#include "qp/witness.hpp"

namespace qp {

/// T3 / T2 / L3 / LOW3 / UP3 / S1 / S2 / TN1 through the structured engine; M2 through the
/// 2x2 classifier (series rings go through the constant-term gate). M3 and TN(n>2): UnsupportedShape.
QuasipolarWitness decompose(const ShapedMatrix& a);

/// Structural checks plus, with an oracle, "p in comm^2(A)" and "A p quasinilpotent" by
/// enumeration. When both oracle checks pass the witness evidence becomes FiniteExhaustive.
CheckList verify_quasipolar(const ShapedMatrix& a, QuasipolarWitness& w, const FiniteRingView* oracle = nullptr);

/// Structural checks plus, with an oracle, "eAe in J(eRe)" by corner enumeration.
CheckList verify_rad_clean(const ShapedMatrix& a, const RadCleanWitness& w, const FiniteRingView* oracle = nullptr);

/// Oracle view for the matrix's ring and shape when it is finite and small enough.
std::optional<FiniteRingView> oracle_for(const ShapedMatrix& a);

}  // namespace qp
