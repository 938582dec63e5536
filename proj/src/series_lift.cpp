#include "qp/series_lift.hpp"

#include "qp/m2.hpp"

namespace qp {

namespace {

void require_series_m2(const ShapedMatrix& a) {
    if (a.shape().tag() != ShapeTag::M2) throw Error(ErrorCode::ShapeMismatch, "expected M2, got " + a.shape().name());
    if (a.ring().kind() != RingKind::TruncatedSeries) {
        throw Error(ErrorCode::RingMismatch, "expected a series ring, got " + a.ring().spec());
    }
}

}  // namespace

SeriesQuadratic series_quadratic(const ShapedMatrix& a) {
    require_series_m2(a);
    return SeriesQuadratic{trace(a), -det2(a)};
}

LiftState lift_root_state(const SeriesQuadratic& sq, const RingElement& b0) {
    const LocalRing& ring = sq.mu.ring();
    if (ring.kind() != RingKind::TruncatedSeries || !(sq.lambda.ring() == ring)) {
        throw Error(ErrorCode::RingMismatch, "mu and lambda must share one series ring");
    }
    const LocalRing& base = ring.base();
    const std::size_t m = ring.precision();
    const auto& mu = sq.mu.coefficients();
    const auto& lambda = sq.lambda.coefficients();

    if (!(b0 * b0 - b0 * mu[0] - lambda[0]).is_zero()) {
        throw Error(ErrorCode::BadSeed, b0.to_string() + " is not a root of the constant quadratic");
    }
    RingElement pivot = b0 + b0 - mu[0];
    if (!is_unit(pivot)) throw Error(ErrorCode::PivotNotUnit, "2*b0 - mu0 = " + pivot.to_string() + " is not a unit");
    const RingElement pivot_inv = inverse(pivot);

    std::vector<RingElement> b(m, base.zero());
    b[0] = b0;
    for (std::size_t i = 1; i < m; ++i) {
        RingElement rhs = lambda[i];
        for (std::size_t k = 0; k < i; ++k) rhs += b[k] * mu[i - k];
        for (std::size_t k = 1; k < i; ++k) rhs -= b[k] * b[i - k];
        b[i] = pivot_inv * rhs;
    }
    return LiftState{std::move(b), std::move(pivot)};
}

RingElement lift_root(const SeriesQuadratic& sq, const RingElement& b0) {
    return sq.mu.ring().series(lift_root_state(sq, b0).b);
}

ShapedMatrix constant_matrix(const ShapedMatrix& a) {
    if (a.ring().kind() != RingKind::TruncatedSeries) {
        throw Error(ErrorCode::RingMismatch, "expected a series ring, got " + a.ring().spec());
    }
    ShapedMatrix out = ShapedMatrix::zero(a.ring().base(), a.shape());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) out.set(i, j, a(i, j).constant_term());
    return out;
}

LiftedSplit lift_split(const ShapedMatrix& a) {
    require_series_m2(a);
    QuadraticCharPoly chi0 = char_poly_2x2(constant_matrix(a));
    if (!in_jacobson(chi0.det) || !is_unit(chi0.tr)) {
        throw Error(ErrorCode::NoConstantSplit, "chi(A(0)) needs det in J and tr a unit for a root split");
    }
    auto roots = find_root_split(chi0);
    if (!roots) throw Error(ErrorCode::NoConstantSplit, "chi(A(0)) has no root in J and root in U");
    SeriesQuadratic sq = series_quadratic(a);
    return LiftedSplit{lift_root(sq, roots->first), lift_root(sq, roots->second)};
}

QuasipolarWitness quasipolar_witness_m2_series(const ShapedMatrix& a) {
    require_series_m2(a);
    const M2Class constant = classify_m2(constant_matrix(a));
    ShapedMatrix p = ShapedMatrix::zero(a.ring(), ShapeTag::M2);
    switch (constant.variant) {
        case M2Variant::Invertible:
            break;
        case M2Variant::Quasinilpotent:
            p = ShapedMatrix::identity(a.ring(), ShapeTag::M2);
            break;
        case M2Variant::Split: {
            LiftedSplit split = lift_split(a);
            p = split_projector(a, split.alpha, split.beta).p;
            break;
        }
        case M2Variant::NotQuasipolar:
            throw Error(ErrorCode::ConstantNotQuasipolar,
                        "A(0) = " + constant_matrix(a).to_string() + " is not quasipolar: " + constant.reason);
    }
    ShapedMatrix u = a + p;
    ShapedMatrix q = a * p;
    return QuasipolarWitness{std::move(p), std::move(u), std::move(q), Comm2Evidence::PolynomialInA};
}

SeriesBleachedReport check_bleached_series(const LocalRing& base, unsigned m) {
    SeriesBleachedReport out{check_uniquely_bleached(base),
                             check_uniquely_bleached(LocalRing::truncated_series(base, m)), false};
    out.agree = out.base.uniquely_bleached == out.series.uniquely_bleached;
    return out;
}

}  // namespace qp
