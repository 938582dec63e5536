#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qp/matrix.hpp"

namespace qp {

/// How membership p in comm^2(A) is justified.
enum class Comm2Evidence {
    FiniteExhaustive,       // every X in the finite ring with XA = AX was checked against p
    CaseTableConstruction,  // p comes from the eight-case T3 construction (or its transports)
    PolynomialInA,          // p = c0*I + c1*A, so it commutes with every X that commutes with A
};

std::string_view to_string(Comm2Evidence evidence);

/// p idempotent in comm^2(A) with u = A + p a unit and q = A p quasinilpotent.
struct QuasipolarWitness {
    ShapedMatrix p;
    ShapedMatrix u;
    ShapedMatrix q;
    Comm2Evidence comm2_evidence;
};

/// Strongly rad clean data: e idempotent commuting with A, v = A - e a unit, corner_j = eAe in J(eRe).
struct RadCleanWitness {
    ShapedMatrix e;
    ShapedMatrix v;
    ShapedMatrix corner_j;
};

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

class CheckList {
public:
    void add(std::string name, bool passed, std::string detail = {}) {
        checks_.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const CheckList& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

    bool all_passed() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return true;
    }
    const std::vector<Check>& checks() const { return checks_; }

private:
    std::vector<Check> checks_;
};

/// Structural invariants that need no enumeration: p^2 = p, pA = Ap, u = A + p, u a unit,
/// q = Ap, and q quasinilpotent (q in J for triangular-type shapes; tr q, det q in J for M2).
CheckList validate_quasipolar_structure(const ShapedMatrix& a, const QuasipolarWitness& w);

/// e^2 = e, eA = Ae, v = A - e a unit, corner_j = eAe with diagonal in J(R).
CheckList validate_rad_clean_structure(const ShapedMatrix& a, const RadCleanWitness& w);

}  // namespace qp
