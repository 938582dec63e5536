#include "qp/structured.hpp"

#include "qp/commutant.hpp"

namespace qp {

namespace {

void require_shape(const ShapedMatrix& a, ShapeTag tag, const char* what) {
    if (a.shape().tag() != tag) {
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + " expects " + Shape(tag).name() + ", got " +
                                                  a.shape().name());
    }
}

QuasipolarWitness witness_from_idempotent(const ShapedMatrix& a, ShapedMatrix p) {
    ShapedMatrix u = a + p;
    ShapedMatrix q = a * p;
    return QuasipolarWitness{std::move(p), std::move(u), std::move(q), Comm2Evidence::CaseTableConstruction};
}

}  // namespace

std::string CaseTag::pattern() const {
    std::string s;
    for (bool u : unit_diagonal) s += u ? 'U' : 'J';
    return s;
}

CaseTag classify_case(const ShapedMatrix& a) {
    require_shape(a, ShapeTag::T3, "classify_case");
    const std::array<bool, 3> u{is_unit(a(0, 0)), is_unit(a(1, 1)), is_unit(a(2, 2))};
    int number = 0;
    if (!u[0] && !u[1] && !u[2]) number = 1;
    else if (u[0] && u[1] && u[2]) number = 2;
    else if (u[0] && !u[1] && !u[2]) number = 3;
    else if (!u[0] && u[1] && !u[2]) number = 4;
    else if (!u[0] && !u[1] && u[2]) number = 5;
    else if (!u[0] && u[1] && u[2]) number = 6;
    else if (u[0] && !u[1] && u[2]) number = 7;
    else number = 8;  // U U J
    return CaseTag{number, u};
}

ShapedMatrix spectral_idempotent_t3(const ShapedMatrix& a) {
    const CaseTag tag = classify_case(a);
    const LocalRing& r = a.ring();
    const RingElement& a11 = a(0, 0);
    const RingElement& a21 = a(1, 0);
    const RingElement& a22 = a(1, 1);
    const RingElement& a23 = a(1, 2);
    const RingElement& a33 = a(2, 2);

    // a22 e - e a11 = rhs   and   a22 e - e a33 = rhs
    auto solve_21 = [&](const RingElement& rhs) { return solve_commutant({a22, a11, rhs}); };
    auto solve_23 = [&](const RingElement& rhs) { return solve_commutant({a22, a33, rhs}); };

    ShapedMatrix e = ShapedMatrix::zero(r, ShapeTag::T3);
    switch (tag.number) {
        case 1:
            return ShapedMatrix::identity(r, ShapeTag::T3);
        case 2:
            return e;
        case 3:
            e.set(1, 0, solve_21(a21));
            e.set(1, 1, r.one());
            e.set(2, 2, r.one());
            return e;
        case 4:
            // The second equation pairs a22 with a33; that is what EA = AE forces at (2,3).
            e.set(0, 0, r.one());
            e.set(1, 0, solve_21(-a21));
            e.set(1, 2, solve_23(-a23));
            e.set(2, 2, r.one());
            return e;
        case 5:
            e.set(0, 0, r.one());
            e.set(1, 1, r.one());
            e.set(1, 2, solve_23(a23));
            return e;
        case 6:
            e.set(0, 0, r.one());
            e.set(1, 0, solve_21(-a21));
            return e;
        case 7:
            e.set(1, 0, solve_21(a21));
            e.set(1, 1, r.one());
            e.set(1, 2, solve_23(a23));
            return e;
        case 8:
            e.set(1, 2, solve_23(-a23));
            e.set(2, 2, r.one());
            return e;
        default:
            break;
    }
    throw Error(ErrorCode::PreconditionViolation, "unreachable case");
}

QuasipolarWitness quasipolar_witness_t3(const ShapedMatrix& a) {
    return witness_from_idempotent(a, spectral_idempotent_t3(a));
}

RadCleanWitness rad_clean_witness_t3(const ShapedMatrix& a) {
    ShapedMatrix e = spectral_idempotent_t3(a);
    ShapedMatrix v = a - e;
    ShapedMatrix corner = e * a * e;
    return RadCleanWitness{std::move(e), std::move(v), std::move(corner)};
}

QuasipolarWitness quasipolar_witness_t2(const ShapedMatrix& a) {
    require_shape(a, ShapeTag::T2, "quasipolar_witness_t2");
    // Embedded with a33 = 0, the T3 construction puts a 1 at (3,3) and leaves e23 = 0,
    // so the corner block of its E is the T2 idempotent.
    ShapedMatrix big = spectral_idempotent_t3(corner_embed_t2(a));
    return witness_from_idempotent(a, corner_extract_t2(big));
}

namespace {

RingElement scalar_idempotent(const RingElement& s) { return is_unit(s) ? s.ring().zero() : s.ring().one(); }

ShapedMatrix idempotent_via_t2_scalar(const ShapeIso& iso, const ShapedMatrix& a) {
    IsoImage image = apply_iso(iso, a);
    IsoImage p_image{quasipolar_witness_t2(image.matrix).p, scalar_idempotent(*image.scalar)};
    return pull_back(iso, p_image);
}

ShapedMatrix idempotent_for_shape(const ShapedMatrix& a) {
    switch (a.shape().tag()) {
        case ShapeTag::T3: return spectral_idempotent_t3(a);
        case ShapeTag::T2: return quasipolar_witness_t2(a).p;
        case ShapeTag::L3: return idempotent_via_t2_scalar(shape_iso(IsoKind::L3ToT2Scalar), a);
        case ShapeTag::S1: return idempotent_via_t2_scalar(shape_iso(IsoKind::S1ToT2Scalar), a);
        case ShapeTag::S2: {
            const ShapeIso& to_s2 = shape_iso(IsoKind::S1ToS2);
            ShapedMatrix s1 = pull_back(to_s2, IsoImage{a, std::nullopt});
            return apply_iso(to_s2, idempotent_for_shape(s1)).matrix;
        }
        case ShapeTag::LOW3: {
            const ShapeIso& to_low3 = shape_iso(IsoKind::T3ToLow3);
            ShapedMatrix t3 = pull_back(to_low3, IsoImage{a, std::nullopt});
            return apply_iso(to_low3, spectral_idempotent_t3(t3)).matrix;
        }
        case ShapeTag::UP3: {
            // Transposition reverses products, which leaves idempotents, commutants,
            // units and quasinilpotents intact.
            const ShapeIso& to_low3 = shape_iso(IsoKind::Up3ToLow3);
            ShapedMatrix low3 = apply_iso(to_low3, a).matrix;
            return pull_back(to_low3, IsoImage{idempotent_for_shape(low3), std::nullopt});
        }
        case ShapeTag::TN:
            if (a.dim() == 1) {
                ShapedMatrix p = ShapedMatrix::zero(a.ring(), a.shape());
                p.set(0, 0, scalar_idempotent(a(0, 0)));
                return p;
            }
            break;
        default:
            break;
    }
    throw Error(ErrorCode::UnsupportedShape, "no quasipolar construction for shape " + a.shape().name());
}

}  // namespace

QuasipolarWitness quasipolar_witness_shape(const ShapedMatrix& a) {
    return witness_from_idempotent(a, idempotent_for_shape(a));
}

}  // namespace qp
