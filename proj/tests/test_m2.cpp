#include <gtest/gtest.h>

#include "qp/decompose.hpp"
#include "qp/m2.hpp"
#include "support.hpp"

using namespace qp;
using namespace qp::test;

namespace {

QuadraticCharPoly quadratic(const LocalRing& r, const std::string& tr, const std::string& det) {
    return {el(r, tr), el(r, det), std::nullopt};
}

/// [a, a d - alpha beta; 1, d] with d = alpha + beta - a has char poly (t - alpha)(t - beta).
ShapedMatrix split_matrix(const LocalRing& r, std::mt19937_64& rng) {
    RingElement alpha = random_any(r, rng);
    while (!in_jacobson(alpha)) alpha = random_any(r, rng);
    RingElement beta = random_any(r, rng);
    while (!is_unit(beta)) beta = random_any(r, rng);
    const RingElement a = random_any(r, rng);
    const RingElement d = alpha + beta - a;
    return ShapedMatrix::from_rows(r, ShapeTag::M2, {{a, a * d - alpha * beta}, {r.one(), d}});
}

}  // namespace

TEST(RootSplit, Examples) {
    const LocalRing z4 = R("Z2^2");
    auto roots = find_root_split(quadratic(z4, "3", "0"));
    ASSERT_TRUE(roots);
    EXPECT_EQ(roots->first, el(z4, "0"));
    EXPECT_EQ(roots->second, el(z4, "3"));
    roots = find_root_split(quadratic(z4, "1", "2"));
    ASSERT_TRUE(roots);
    EXPECT_EQ(roots->first, el(z4, "2"));
    EXPECT_EQ(roots->second, el(z4, "3"));
    EXPECT_FALSE(find_root_split(quadratic(R("Zloc2"), "1", "2")));
}

TEST(RootSplit, LocalizedQuadraticFormula) {
    const LocalRing zl = R("Zloc2");
    // t^2 - 3t + 2 = (t - 1)(t - 2)
    auto roots = find_root_split(quadratic(zl, "3", "2"));
    ASSERT_TRUE(roots);
    EXPECT_EQ(roots->first, el(zl, "2"));
    EXPECT_EQ(roots->second, el(zl, "1"));
    // t^2 - t/3 - 2/9 = (t - 2/3)(t + 1/3) over Zloc2
    roots = find_root_split(quadratic(zl, "1/3", "-2/9"));
    ASSERT_TRUE(roots);
    EXPECT_EQ(roots->first, el(zl, "2/3"));
    EXPECT_EQ(roots->second, el(zl, "-1/3"));
    // t^2 - t + 1/4 is not even admissible, 1/4 is not in Zloc2; over Zloc3 the double root 1/2 is a unit.
    EXPECT_THROW(find_root_split(quadratic(R("Zloc3"), "1", "1/4")), Error);
    // t^2 - 3t/5 + 0 over Zloc5 would need the root 3/5: not in the ring.
    EXPECT_THROW(find_root_split(quadratic(R("Zloc5"), "3/5", "0")), Error);
}

TEST(RootSplit, RequiresRadicalDeterminantAndUnitTrace) {
    const LocalRing z4 = R("Z2^2");
    try {
        find_root_split(quadratic(z4, "2", "0"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolation);
    }
    EXPECT_THROW(find_root_split(quadratic(z4, "1", "1")), Error);
}

TEST(RootSplit, ClassSplitIsForced) {
    for (const char* spec : {"Z2^2", "Z2^3", "Z3^2", "F3", "F5"}) {
        const LocalRing r = R(spec);
        for (const auto& tr : r.enumerate()) {
            if (!is_unit(tr)) continue;
            for (const auto& det : r.enumerate()) {
                if (!in_jacobson(det)) continue;
                const QuadraticCharPoly chi{tr, det, std::nullopt};
                const auto roots = find_root_split(chi);
                bool brute = false;
                for (const auto& t : r.enumerate()) brute = brute || (in_jacobson(t) && chi.evaluate(t).is_zero());
                EXPECT_EQ(roots.has_value(), brute) << spec;
                if (!roots) continue;
                EXPECT_TRUE(in_jacobson(roots->first));
                EXPECT_TRUE(is_unit(roots->second));
                EXPECT_EQ(roots->first + roots->second, tr);
                EXPECT_EQ(roots->first * roots->second, det);
                int radical_roots = 0;
                for (const auto& t : r.enumerate())
                    if (chi.evaluate(t).is_zero() && in_jacobson(t)) ++radical_roots;
                EXPECT_EQ(radical_roots, 1) << spec;
            }
        }
    }
}

TEST(ClassifyM2, Examples) {
    const LocalRing z4 = R("Z2^2");
    M2Class c = classify_m2(M(z4, ShapeTag::M2, "[0,0;1,3]"));
    EXPECT_EQ(c.variant, M2Variant::Split);
    EXPECT_EQ(c.chi.roots->first, el(z4, "0"));
    EXPECT_EQ(c.chi.roots->second, el(z4, "3"));
    EXPECT_EQ(classify_m2(M(z4, ShapeTag::M2, "[2,2;2,2]")).variant, M2Variant::Quasinilpotent);
    EXPECT_EQ(classify_m2(ShapedMatrix::identity(z4, ShapeTag::M2)).variant, M2Variant::Invertible);
    c = classify_m2(ShapedMatrix::from_ints(R("Zloc2"), ShapeTag::M2, {{0, -2}, {1, 1}}));
    EXPECT_EQ(c.variant, M2Variant::NotQuasipolar);
    EXPECT_EQ(c.reason, "disc=-7 is not a square");
    EXPECT_THROW(classify_m2(ShapedMatrix::identity(z4, ShapeTag::T2)), Error);
}

TEST(WitnessM2, Examples) {
    const LocalRing z4 = R("Z2^2");
    const ShapedMatrix a = M(z4, ShapeTag::M2, "[0,0;1,3]");
    const QuasipolarWitness w = quasipolar_witness_m2(a);
    EXPECT_EQ(w.p, M(z4, ShapeTag::M2, "[1,0;1,0]"));
    EXPECT_EQ(a * w.p, ShapedMatrix::zero(z4, ShapeTag::M2));
    EXPECT_EQ(w.u, M(z4, ShapeTag::M2, "[1,0;2,3]"));
    EXPECT_EQ(det2(w.u), el(z4, "3"));
    EXPECT_EQ(w.comm2_evidence, Comm2Evidence::PolynomialInA);

    const QuasipolarWitness id = quasipolar_witness_m2(ShapedMatrix::identity(z4, ShapeTag::M2));
    EXPECT_EQ(id.p, ShapedMatrix::zero(z4, ShapeTag::M2));
    EXPECT_EQ(id.u, ShapedMatrix::identity(z4, ShapeTag::M2));

    const ShapedMatrix rad = M(z4, ShapeTag::M2, "[2,2;2,2]");
    QuasipolarWitness wr = quasipolar_witness_m2(rad);
    EXPECT_EQ(wr.p, ShapedMatrix::identity(z4, ShapeTag::M2));
    EXPECT_EQ(wr.u, M(z4, ShapeTag::M2, "[3,2;2,3]"));
    EXPECT_TRUE(det2(wr.u).is_one());
    const FiniteRingView view(z4, ShapeTag::M2);
    EXPECT_TRUE(view.is_quasinilpotent(wr.q));
    EXPECT_TRUE(verify_quasipolar(rad, wr, &view).all_passed());
    EXPECT_EQ(wr.comm2_evidence, Comm2Evidence::FiniteExhaustive);

    try {
        quasipolar_witness_m2(ShapedMatrix::from_ints(R("Zloc2"), ShapeTag::M2, {{0, -2}, {1, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotQuasipolar);
    }
}

TEST(WitnessM2, ProjectorIsPolynomialInA) {
    std::mt19937_64 rng(31);
    for (const char* spec : {"Z2^2", "Z2^3", "F3", "Z3^2", "Zloc2", "Zloc3"}) {
        const LocalRing r = R(spec);
        const ShapedMatrix id = ShapedMatrix::identity(r, ShapeTag::M2);
        int splits = 0;
        for (int i = 0; i < 2000 && splits < 100; ++i) {
            const ShapedMatrix a = r.is_finite() ? random_matrix(r, ShapeTag::M2, rng) : split_matrix(r, rng);
            const M2Class c = classify_m2(a);
            if (c.variant != M2Variant::Split) continue;
            ++splits;
            const auto& [alpha, beta] = *c.chi.roots;
            const SpectralProjector sp = split_projector(a, alpha, beta);
            EXPECT_EQ(sp.p, sp.c0 * id + sp.c1 * a);
            EXPECT_EQ(sp.c0, beta * inverse(beta - alpha));
            EXPECT_EQ(sp.c1, -inverse(beta - alpha));
            EXPECT_EQ(a * sp.p, alpha * sp.p);
            EXPECT_EQ((a - alpha * id) * (a - beta * id), ShapedMatrix::zero(r, ShapeTag::M2));
            EXPECT_TRUE(is_idempotent(sp.p));
            EXPECT_TRUE(validate_quasipolar_structure(a, quasipolar_witness_m2(a)).all_passed());
        }
        EXPECT_GT(splits, 0) << spec;
    }
}

TEST(WitnessM2, LocalizedSplitExample) {
    const LocalRing zl = R("Zloc2");
    const ShapedMatrix a = ShapedMatrix::from_ints(zl, ShapeTag::M2, {{0, -2}, {1, 3}});
    const M2Class c = classify_m2(a);
    ASSERT_EQ(c.variant, M2Variant::Split);
    EXPECT_EQ(c.chi.roots->first, el(zl, "2"));
    EXPECT_EQ(c.chi.roots->second, el(zl, "1"));
    const QuasipolarWitness w = quasipolar_witness_m2(a);
    EXPECT_TRUE(validate_quasipolar_structure(a, w).all_passed());
    // (1 - 2)^-1 (I - A) = A - I
    EXPECT_EQ(w.p, ShapedMatrix::from_ints(zl, ShapeTag::M2, {{-1, -2}, {1, 2}}));
}

class M2Exhaustive : public ::testing::TestWithParam<const char*> {};

TEST_P(M2Exhaustive, ClassificationMatchesOracle) {
    const FiniteRingView view(R(GetParam()), ShapeTag::M2);
    for (std::size_t i = 0; i < view.size(); ++i) {
        const ShapedMatrix a = view.element(i);
        const M2Class c = classify_m2(a);
        const std::vector<std::size_t> found = view.quasipolar_idempotents(i);
        ASSERT_EQ(c.variant != M2Variant::NotQuasipolar, !found.empty()) << a;
        if (found.empty()) continue;
        QuasipolarWitness w = quasipolar_witness_m2(a);
        EXPECT_NE(std::find(found.begin(), found.end(), view.index_of(w.p)), found.end()) << a;
        EXPECT_TRUE(verify_quasipolar(a, w, &view).all_passed()) << a;
    }
}

INSTANTIATE_TEST_SUITE_P(Small, M2Exhaustive, ::testing::Values("F2", "F3", "Z2^2", "series(F2,2)"));
