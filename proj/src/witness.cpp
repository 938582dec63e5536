#include "qp/witness.hpp"

namespace qp {

std::string_view to_string(Comm2Evidence evidence) {
    switch (evidence) {
        case Comm2Evidence::FiniteExhaustive: return "FiniteExhaustive";
        case Comm2Evidence::CaseTableConstruction: return "CaseTableConstruction";
        case Comm2Evidence::PolynomialInA: return "PolynomialInA";
    }
    return "Unknown";
}

CheckList validate_quasipolar_structure(const ShapedMatrix& a, const QuasipolarWitness& w) {
    CheckList out;
    const ShapedMatrix ap = a * w.p;
    out.add("p idempotent", is_idempotent(w.p));
    out.add("p commutes with A", ap == w.p * a);
    out.add("u = A + p", w.u == a + w.p);
    out.add("u unit", is_unit_shaped(w.u));
    out.add("q = A p", w.q == ap);
    if (a.shape().tag() == ShapeTag::M2) {
        // Over a commutative local ring, tr, det in J gives q^2 = tr q - det I in M2(J).
        out.add("q quasinilpotent (tr q, det q in J)", in_jacobson(trace(w.q)) && in_jacobson(det2(w.q)));
    } else {
        out.add("q in J(shape)", in_jacobson_shaped(w.q));
    }
    return out;
}

CheckList validate_rad_clean_structure(const ShapedMatrix& a, const RadCleanWitness& w) {
    CheckList out;
    out.add("e idempotent", is_idempotent(w.e));
    out.add("e commutes with A", commutes(w.e, a));
    out.add("v = A - e", w.v == a - w.e);
    out.add("v unit", is_unit_shaped(w.v));
    out.add("corner = eAe", w.corner_j == w.e * a * w.e);
    bool diag_in_j = true;
    for (unsigned i = 0; i < a.dim(); ++i) diag_in_j = diag_in_j && in_jacobson(w.corner_j(i, i));
    out.add("eAe diagonal in J", diag_in_j);
    return out;
}

}  // namespace qp
