#pragma once

// Spectral idempotents for T3(R) over a commutative local ring R, following the
// eight diagonal patterns of a11, a22, a33 (U = unit, J = radical):
//
//   case  pattern  E
//   1     J J J    I
//   2     U U U    0
//   3     U J J    [0 0 0; e21 1 0; 0 0 1]      a22 e21 - e21 a11 =  a21
//   4     J U J    [1 0 0; e21 0 e23; 0 0 1]    a22 e21 - e21 a11 = -a21,  a22 e23 - e23 a33 = -a23
//   5     J J U    [1 0 0; 0 1 e23; 0 0 0]      a22 e23 - e23 a33 =  a23
//   6     J U U    [1 0 0; e21 0 0; 0 0 0]      a22 e21 - e21 a11 = -a21
//   7     U J U    [0 0 0; e21 1 e23; 0 0 0]    a22 e21 - e21 a11 =  a21,  a22 e23 - e23 a33 =  a23
//   8     U U J    [0 0 0; 0 0 e23; 0 0 1]      a22 e23 - e23 a33 = -a23
//
// E has 1 on the diagonal exactly where A has a radical entry, so both A - E and A + E
// are units and AE lies in J(T3). The same E is returned as the quasipolar idempotent.

#include <array>
#include <string>

#include "qp/matrix.hpp"
#include "qp/witness.hpp"

namespace qp {

struct CaseTag {
    int number;                       // 1..8
    std::array<bool, 3> unit_diagonal;  // is a_ii a unit

    /// e.g. "UJJ"
    std::string pattern() const;
};

CaseTag classify_case(const ShapedMatrix& a);
ShapedMatrix spectral_idempotent_t3(const ShapedMatrix& a);

QuasipolarWitness quasipolar_witness_t3(const ShapedMatrix& a);
RadCleanWitness rad_clean_witness_t3(const ShapedMatrix& a);
/// Built from the T3 table through the corner identification T2 = E T3 E.
QuasipolarWitness quasipolar_witness_t2(const ShapedMatrix& a);

/// Shapes L3, LOW3, UP3, S1, S2 are transported to T3 or T2 (+) R, decomposed there and
/// pulled back. T3, T2 and TN1 (scalars) are handled directly. Others: UnsupportedShape.
QuasipolarWitness quasipolar_witness_shape(const ShapedMatrix& a);

}  // namespace qp
