#include "qp/m2.hpp"

#include "qp/series_lift.hpp"

namespace qp {

std::string_view to_string(M2Variant v) {
    switch (v) {
        case M2Variant::Invertible: return "Invertible";
        case M2Variant::Quasinilpotent: return "Quasinilpotent";
        case M2Variant::Split: return "Split";
        case M2Variant::NotQuasipolar: return "NotQuasipolar";
    }
    return "Unknown";
}

namespace {

struct SplitSearch {
    std::optional<std::pair<RingElement, RingElement>> roots;
    std::string reason;
};

std::pair<RingElement, RingElement> order_roots(const QuadraticCharPoly& chi, const RingElement& root) {
    RingElement other = chi.tr - root;
    if (in_jacobson(root)) return {root, other};
    return {other, root};
}

SplitSearch split_localized(const QuadraticCharPoly& chi) {
    const LocalRing& r = chi.tr.ring();
    const Fraction& tr = chi.tr.fraction();
    // disc = tr^2 - 4 det as a reduced fraction
    RingElement disc_elem = chi.tr * chi.tr - r.from_int(4) * chi.det;
    const Fraction& disc = disc_elem.fraction();
    auto sn = exact_sqrt(disc.num);
    auto sd = exact_sqrt(disc.den);
    if (!sn || !sd) return {std::nullopt, "disc=" + disc_elem.to_string() + " is not a square"};
    // (tr +- sqrt(disc)) / 2 = (tr.num*sd +- sn*tr.den) / (2 tr.den sd); keep a root whose
    // reduced denominator is prime to p.
    const BigInt den = 2 * tr.den * *sd;
    for (int sign : {1, -1}) {
        const BigInt num = tr.num * *sd + sign * *sn * tr.den;
        BigInt g = gcd(num < 0 ? BigInt(-num) : num, den);
        if ((den / g) % r.prime() != 0) {
            RingElement root = r.from_fraction(num, den);
            return {order_roots(chi, root), {}};
        }
    }
    return {std::nullopt, "roots of t^2 - tr*t + det are not in " + r.spec()};
}

SplitSearch split_modular(const QuadraticCharPoly& chi) {
    const LocalRing& r = chi.tr.ring();
    for (std::uint64_t i = 0; i < r.order(); ++i) {
        RingElement t = r.element_at(i);
        if (in_jacobson(t) && chi.evaluate(t).is_zero()) return {order_roots(chi, t), {}};
    }
    return {std::nullopt, "t^2 - tr*t + det has no root in " + r.spec()};
}

SplitSearch split_series(const QuadraticCharPoly& chi) {
    QuadraticCharPoly constant{chi.tr.constant_term(), chi.det.constant_term(), std::nullopt};
    auto base_roots = find_root_split(constant);
    if (!base_roots) return {std::nullopt, "constant term has no root split in " + chi.tr.ring().base().spec()};
    SeriesQuadratic sq{chi.tr, -chi.det};
    return {std::pair{lift_root(sq, base_roots->first), lift_root(sq, base_roots->second)}, {}};
}

SplitSearch search_split(const QuadraticCharPoly& chi) {
    if (!in_jacobson(chi.det) || !is_unit(chi.tr)) {
        throw Error(ErrorCode::PreconditionViolation, "root split needs det in J and tr a unit");
    }
    switch (chi.tr.ring().kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersModPk: return split_modular(chi);
        case RingKind::LocalizedIntegers: return split_localized(chi);
        case RingKind::TruncatedSeries: return split_series(chi);
    }
    throw Error(ErrorCode::InvalidRing, "unreachable");
}

void require_m2(const ShapedMatrix& a) {
    if (a.shape().tag() != ShapeTag::M2) throw Error(ErrorCode::ShapeMismatch, "expected M2, got " + a.shape().name());
}

}  // namespace

std::optional<std::pair<RingElement, RingElement>> find_root_split(const QuadraticCharPoly& chi) {
    return search_split(chi).roots;
}

M2Class classify_m2(const ShapedMatrix& a) {
    require_m2(a);
    QuadraticCharPoly chi = char_poly_2x2(a);
    if (is_unit(chi.det)) return {M2Variant::Invertible, std::move(chi), {}};
    if (in_jacobson(chi.tr)) return {M2Variant::Quasinilpotent, std::move(chi), {}};
    SplitSearch s = search_split(chi);
    if (!s.roots) return {M2Variant::NotQuasipolar, std::move(chi), s.reason};
    chi.roots = std::move(s.roots);
    return {M2Variant::Split, std::move(chi), {}};
}

SpectralProjector split_projector(const ShapedMatrix& a, const RingElement& alpha, const RingElement& beta) {
    require_m2(a);
    RingElement gap_inv = inverse(beta - alpha);
    RingElement c0 = beta * gap_inv;
    RingElement c1 = -gap_inv;
    ShapedMatrix p = c0 * ShapedMatrix::identity(a.ring(), ShapeTag::M2) + c1 * a;
    return {std::move(c0), std::move(c1), std::move(p)};
}

QuasipolarWitness quasipolar_witness_m2(const ShapedMatrix& a) {
    M2Class cls = classify_m2(a);
    ShapedMatrix p = ShapedMatrix::zero(a.ring(), ShapeTag::M2);
    switch (cls.variant) {
        case M2Variant::Invertible:
            break;
        case M2Variant::Quasinilpotent:
            p = ShapedMatrix::identity(a.ring(), ShapeTag::M2);
            break;
        case M2Variant::Split:
            p = split_projector(a, cls.chi.roots->first, cls.chi.roots->second).p;
            break;
        case M2Variant::NotQuasipolar:
            throw Error(ErrorCode::NotQuasipolar, a.to_string() + " is not quasipolar: " + cls.reason);
    }
    ShapedMatrix u = a + p;
    ShapedMatrix q = a * p;
    return QuasipolarWitness{std::move(p), std::move(u), std::move(q), Comm2Evidence::PolynomialInA};
}

}  // namespace qp
