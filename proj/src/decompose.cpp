#include "qp/decompose.hpp"

#include "qp/m2.hpp"
#include "qp/series_lift.hpp"
#include "qp/structured.hpp"

namespace qp {

QuasipolarWitness decompose(const ShapedMatrix& a) {
    if (a.shape().tag() == ShapeTag::M2) {
        if (a.ring().kind() == RingKind::TruncatedSeries) return quasipolar_witness_m2_series(a);
        return quasipolar_witness_m2(a);
    }
    if (a.shape().tag() == ShapeTag::T3) return quasipolar_witness_t3(a);
    return quasipolar_witness_shape(a);
}

CheckList verify_quasipolar(const ShapedMatrix& a, QuasipolarWitness& w, const FiniteRingView* oracle) {
    CheckList checks = validate_quasipolar_structure(a, w);
    if (oracle != nullptr) {
        const std::size_t ai = oracle->index_of(a);
        const bool comm2 = oracle->in_double_commutant(ai, oracle->index_of(w.p));
        const bool qnil = oracle->is_quasinilpotent(oracle->index_of(w.q));
        checks.add("p in comm^2(A) (exhaustive)", comm2, std::to_string(oracle->commutant(ai).size()) + " commuting elements");
        checks.add("A p quasinilpotent (exhaustive)", qnil);
        if (comm2 && qnil) w.comm2_evidence = Comm2Evidence::FiniteExhaustive;
    }
    return checks;
}

CheckList verify_rad_clean(const ShapedMatrix& a, const RadCleanWitness& w, const FiniteRingView* oracle) {
    CheckList checks = validate_rad_clean_structure(a, w);
    if (oracle != nullptr) {
        const std::size_t e = oracle->index_of(w.e);
        bool ok = false;
        std::string detail;
        try {
            ok = oracle->in_corner_jacobson(e, oracle->index_of(w.corner_j));
        } catch (const Error& err) {
            detail = err.what();
        }
        checks.add("eAe in J(eRe) (exhaustive)", ok, detail);
    }
    return checks;
}

std::optional<FiniteRingView> oracle_for(const ShapedMatrix& a) {
    if (!a.ring().is_finite()) return std::nullopt;
    try {
        return FiniteRingView(a.ring(), a.shape());
    } catch (const Error& err) {
        if (err.code() == ErrorCode::CarrierTooLarge) return std::nullopt;
        throw;
    }
}

}  // namespace qp
