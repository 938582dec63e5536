#pragma once

// Coefficient-by-coefficient lifting of a root of y^2 - mu(x) y - lambda(x) from R to
// R[[x]]/(x^m), and the induced quasipolar decompositions of 2x2 matrices over the
// truncated series ring.
//
// Writing y = sum b_i x^i, the x^i coefficient of y^2 - mu y - lambda is
//   sum_k b_k b_{i-k} - sum_k b_k mu_{i-k} - lambda_i,
// in which b_i appears only as b_i (2 b_0 - mu_0). With the pivot 2 b_0 - mu_0 a unit,
//   b_i = pivot^-1 (lambda_i + sum_{0<=k<i} b_k mu_{i-k} - sum_{0<k<i} b_k b_{i-k}).
// For b_0 in {alpha, beta} the pivot is +-(alpha - beta), a unit when alpha in J, beta in U.

#include <vector>

#include "qp/commutant.hpp"
#include "qp/matrix.hpp"
#include "qp/witness.hpp"

namespace qp {

/// y^2 - mu y - lambda over a truncated series ring; for a matrix, mu = tr A and lambda = -det A.
struct SeriesQuadratic {
    RingElement mu;
    RingElement lambda;

    RingElement evaluate(const RingElement& y) const { return y * y - mu * y - lambda; }
};

SeriesQuadratic series_quadratic(const ShapedMatrix& a);

struct LiftState {
    std::vector<RingElement> b;  // b_0 .. b_{m-1}, over the base ring
    RingElement pivot;           // 2 b_0 - mu_0
};

/// Throws BadSeed if b0 is not a root of the constant quadratic, PivotNotUnit if 2 b0 - mu0 is not a unit.
LiftState lift_root_state(const SeriesQuadratic& sq, const RingElement& b0);
RingElement lift_root(const SeriesQuadratic& sq, const RingElement& b0);

struct LiftedSplit {
    RingElement alpha;  // alpha(0) in J(R)
    RingElement beta;   // beta(0) in U(R)
};

/// A(0) over the base ring, entry by entry.
ShapedMatrix constant_matrix(const ShapedMatrix& a);

/// Lifts the root split of chi(A(0)); NoConstantSplit when chi(A(0)) has none.
LiftedSplit lift_split(const ShapedMatrix& a);

/// Decides through A(0): invertible -> p = 0, tr, det in J -> p = I, split -> lifted spectral
/// projector. Throws ConstantNotQuasipolar when A(0) is not quasipolar.
QuasipolarWitness quasipolar_witness_m2_series(const ShapedMatrix& a);

struct SeriesBleachedReport {
    BleachedReport base;
    BleachedReport series;
    bool agree;
};

/// Uniquely bleached check on the base ring and on series(base, m).
SeriesBleachedReport check_bleached_series(const LocalRing& base, unsigned m);

}  // namespace qp
