#include <gtest/gtest.h>

#include "qp/decompose.hpp"
#include "qp/structured.hpp"
#include "qp/sweep.hpp"
#include "support.hpp"

using namespace qp;
using namespace qp::test;

namespace {

const LocalRing& z4() {
    static const LocalRing r = R("Z2^2");
    return r;
}

ShapedMatrix t3(const std::string& literal) { return M(z4(), ShapeTag::T3, literal); }

}  // namespace

TEST(CaseTable, ClassifiesDiagonalPatterns) {
    EXPECT_EQ(classify_case(t3("[2,0,0; 0,2,0; 0,0,2]")).number, 1);
    EXPECT_EQ(classify_case(t3("[1,0,0; 0,3,0; 0,0,3]")).number, 2);
    EXPECT_EQ(classify_case(t3("[1,0,0; 0,2,0; 0,0,2]")).number, 3);
    EXPECT_EQ(classify_case(t3("[0,0,0; 0,1,0; 0,0,2]")).number, 4);
    EXPECT_EQ(classify_case(t3("[0,0,0; 0,2,0; 0,0,1]")).number, 5);
    EXPECT_EQ(classify_case(t3("[2,0,0; 0,1,0; 0,0,3]")).number, 6);
    EXPECT_EQ(classify_case(t3("[1,0,0; 0,0,0; 0,0,1]")).number, 7);
    EXPECT_EQ(classify_case(t3("[1,0,0; 0,1,0; 0,0,0]")).number, 8);
    EXPECT_EQ(classify_case(t3("[1,0,0; 0,2,0; 0,0,2]")).pattern(), "UJJ");
    EXPECT_THROW(classify_case(M(z4(), ShapeTag::L3, "[1,0,0; 0,1,0; 0,0,1]")), Error);
}

TEST(CaseTable, WorkedUJJExample) {
    const ShapedMatrix a = t3("[1,0,0; 1,2,0; 0,0,2]");
    const ShapedMatrix e = spectral_idempotent_t3(a);
    EXPECT_EQ(e, t3("[0,0,0; 1,1,0; 0,0,1]"));
    EXPECT_EQ(a - e, ShapedMatrix::identity(z4(), ShapeTag::T3));
    EXPECT_EQ(a * e, t3("[0,0,0; 2,2,0; 0,0,2]"));

    const QuasipolarWitness w = quasipolar_witness_t3(a);
    EXPECT_EQ(w.p, e);
    EXPECT_EQ(w.u, t3("[1,0,0; 2,3,0; 0,0,3]"));
    EXPECT_EQ(w.q, t3("[0,0,0; 2,2,0; 0,0,2]"));
    EXPECT_EQ(w.comm2_evidence, Comm2Evidence::CaseTableConstruction);
    EXPECT_TRUE(validate_quasipolar_structure(a, w).all_passed());
}

TEST(CaseTable, RadicalAndUnitExtremes) {
    const ShapedMatrix id = ShapedMatrix::identity(z4(), ShapeTag::T3);
    const ShapedMatrix zero = ShapedMatrix::zero(z4(), ShapeTag::T3);
    const ShapedMatrix rad = t3("[2,0,0; 3,0,1; 0,0,2]");
    QuasipolarWitness w = quasipolar_witness_t3(rad);
    EXPECT_EQ(w.p, id);
    EXPECT_EQ(w.u, rad + id);
    EXPECT_EQ(w.q, rad);
    const ShapedMatrix unit = t3("[1,0,0; 2,3,1; 0,0,1]");
    w = quasipolar_witness_t3(unit);
    EXPECT_EQ(w.p, zero);
    EXPECT_EQ(w.u, unit);
    EXPECT_EQ(w.q, zero);
    EXPECT_EQ(spectral_idempotent_t3(zero), id);
    EXPECT_EQ(spectral_idempotent_t3(id), zero);
}

TEST(CaseTable, MixedCaseUsesA33InSecondEquation) {
    // Pattern JUJ with a11 != a33 and a23 != 0.
    const ShapedMatrix a = t3("[0,0,0; 0,1,1; 0,0,2]");
    const ShapedMatrix e = spectral_idempotent_t3(a);
    EXPECT_TRUE(is_idempotent(e));
    EXPECT_TRUE(commutes(e, a));
    EXPECT_EQ(e, t3("[1,0,0; 0,0,1; 0,0,1]"));
    // Solving a22 e23 - e23 a11 = -a23 instead gives e23 = 3, which does not commute with A.
    const ShapedMatrix wrong = t3("[1,0,0; 0,0,3; 0,0,1]");
    EXPECT_TRUE(is_idempotent(wrong));
    EXPECT_FALSE(commutes(wrong, a));
}

TEST(CaseTable, IdempotentWorksForBothSigns) {
    const FiniteRingView view(z4(), ShapeTag::T3);
    for (std::size_t i = 0; i < view.size(); ++i) {
        const ShapedMatrix a = view.element(i);
        const ShapedMatrix e = spectral_idempotent_t3(a);
        EXPECT_EQ(spectral_idempotent_t3(-a), e);
        EXPECT_TRUE(is_unit_shaped(a - e));
        EXPECT_TRUE(is_unit_shaped(a + e));
        for (unsigned k = 0; k < 3; ++k) EXPECT_EQ(e(k, k).is_one(), in_jacobson(a(k, k)));
    }
}

TEST(CaseTable, ExhaustiveAgainstOracle) {
    for (const char* spec : {"F2", "F3", "Z2^2"}) {
        const FiniteRingView view(R(spec), ShapeTag::T3);
        const SweepReport report = run_sweep(view, SweepCheck::Quasipolar, all_indices(view));
        EXPECT_TRUE(report.ok()) << spec << ": " << report.mismatches.front().reason;
        EXPECT_EQ(report.groups.size(), 8u);
    }
}

TEST(CaseTable, SeriesEntriesAgainstOracle) {
    const FiniteRingView view(R("series(F2,2)"), ShapeTag::T3);
    EXPECT_EQ(view.size(), 1024u);
    const SweepReport report = run_sweep(view, SweepCheck::Quasipolar, all_indices(view));
    EXPECT_TRUE(report.ok());
}

TEST(CaseTable, LocalizedEntriesValidateStructurally) {
    std::mt19937_64 rng(5);
    const LocalRing zl = R("Zloc2");
    for (int i = 0; i < 300; ++i) {
        const ShapedMatrix a = random_matrix(zl, ShapeTag::T3, rng);
        const QuasipolarWitness w = quasipolar_witness_t3(a);
        EXPECT_TRUE(validate_quasipolar_structure(a, w).all_passed()) << a;
        EXPECT_EQ(w.comm2_evidence, Comm2Evidence::CaseTableConstruction);
    }
}

TEST(RadClean, Examples) {
    const ShapedMatrix a = t3("[1,0,0; 1,2,0; 0,0,2]");
    const RadCleanWitness w = rad_clean_witness_t3(a);
    EXPECT_EQ(w.e, t3("[0,0,0; 1,1,0; 0,0,1]"));
    EXPECT_EQ(w.v, a - w.e);
    EXPECT_EQ(w.corner_j, w.e * a * w.e);
    EXPECT_EQ(w.corner_j(1, 1), el(z4(), "2"));
    EXPECT_EQ(w.corner_j(2, 2), el(z4(), "2"));
    EXPECT_TRUE(validate_rad_clean_structure(a, w).all_passed());

    const ShapedMatrix id = ShapedMatrix::identity(z4(), ShapeTag::T3);
    const RadCleanWitness zero = rad_clean_witness_t3(ShapedMatrix::zero(z4(), ShapeTag::T3));
    EXPECT_EQ(zero.e, id);
    EXPECT_EQ(zero.v, -id);
    const RadCleanWitness one = rad_clean_witness_t3(id);
    EXPECT_TRUE(one.e == ShapedMatrix::zero(z4(), ShapeTag::T3));
    EXPECT_EQ(one.v, id);
}

TEST(RadClean, ExhaustiveAgainstOracleOverF3) {
    const FiniteRingView view(R("F3"), ShapeTag::T3);
    const SweepReport report = run_sweep(view, SweepCheck::RadClean, all_indices(view));
    EXPECT_TRUE(report.ok());
}

TEST(TwoByTwoTriangular, Examples) {
    const ShapedMatrix a = M(z4(), ShapeTag::T2, "[2,1; 0,1]");
    const QuasipolarWitness w = quasipolar_witness_t2(a);
    EXPECT_EQ(w.p, M(z4(), ShapeTag::T2, "[1,1; 0,0]"));
    EXPECT_TRUE(validate_quasipolar_structure(a, w).all_passed());
    EXPECT_EQ(quasipolar_witness_t2(M(z4(), ShapeTag::T2, "[2,3; 0,0]")).p, ShapedMatrix::identity(z4(), ShapeTag::T2));
    EXPECT_EQ(quasipolar_witness_t2(M(z4(), ShapeTag::T2, "[1,2; 0,3]")).p, ShapedMatrix::zero(z4(), ShapeTag::T2));
}

TEST(TwoByTwoTriangular, ExhaustiveAgainstOracle) {
    const FiniteRingView view(z4(), ShapeTag::T2);
    ASSERT_EQ(view.size(), 64u);
    const SweepReport report = run_sweep(view, SweepCheck::Quasipolar, all_indices(view));
    EXPECT_TRUE(report.ok());
}

TEST(ShapeTransport, LowerCornerExample) {
    const ShapedMatrix a = M(z4(), ShapeTag::L3, "[2,0,0; 0,1,0; 1,0,3]");
    QuasipolarWitness w = quasipolar_witness_shape(a);
    const FiniteRingView view(z4(), ShapeTag::L3);
    EXPECT_TRUE(verify_quasipolar(a, w, &view).all_passed());
    // The scalar factor a22 = 1 is a unit, so p vanishes there.
    EXPECT_TRUE(w.p(1, 1).is_zero());
    const IsoImage img = apply_iso(shape_iso(IsoKind::L3ToT2Scalar), w.p);
    EXPECT_EQ(img.matrix, quasipolar_witness_t2(M(z4(), ShapeTag::T2, "[3,1; 0,2]")).p);
}

TEST(ShapeTransport, ZeroAndIdentity) {
    for (Shape s : {Shape(ShapeTag::L3), Shape(ShapeTag::LOW3), Shape(ShapeTag::UP3), Shape(ShapeTag::S1),
                    Shape(ShapeTag::S2), Shape(ShapeTag::T2), Shape::upper_triangular(1)}) {
        const ShapedMatrix zero = ShapedMatrix::zero(z4(), s);
        const ShapedMatrix id = ShapedMatrix::identity(z4(), s);
        EXPECT_EQ(quasipolar_witness_shape(zero).p, id) << s.name();
        EXPECT_EQ(quasipolar_witness_shape(id).p, zero) << s.name();
    }
    EXPECT_THROW(quasipolar_witness_shape(ShapedMatrix::identity(z4(), ShapeTag::M3)), Error);
    EXPECT_THROW(quasipolar_witness_shape(ShapedMatrix::identity(z4(), Shape::upper_triangular(4))), Error);
}

TEST(ShapeTransport, WitnessCommutesWithIsomorphisms) {
    std::mt19937_64 rng(17);
    for (IsoKind kind : {IsoKind::T3ToLow3, IsoKind::Up3ToLow3, IsoKind::S1ToS2}) {
        const ShapeIso& iso = shape_iso(kind);
        for (int i = 0; i < 300; ++i) {
            const ShapedMatrix a = random_matrix(z4(), iso.source, rng);
            const ShapedMatrix image = apply_iso(iso, a).matrix;
            EXPECT_EQ(decompose(image).p, apply_iso(iso, decompose(a).p).matrix);
        }
    }
    for (IsoKind kind : {IsoKind::L3ToT2Scalar, IsoKind::S1ToT2Scalar, IsoKind::S2ToT2Scalar}) {
        const ShapeIso& iso = shape_iso(kind);
        for (int i = 0; i < 300; ++i) {
            const ShapedMatrix a = random_matrix(z4(), iso.source, rng);
            const IsoImage image = apply_iso(iso, a);
            const IsoImage p_image = apply_iso(iso, decompose(a).p);
            EXPECT_EQ(quasipolar_witness_t2(image.matrix).p, p_image.matrix);
            EXPECT_EQ(is_unit(*image.scalar), p_image.scalar->is_zero());
        }
    }
}

TEST(ShapeTransport, SampledAgainstOracle) {
    for (Shape s : {Shape(ShapeTag::L3), Shape(ShapeTag::LOW3), Shape(ShapeTag::UP3), Shape(ShapeTag::S1),
                    Shape(ShapeTag::S2)}) {
        const FiniteRingView view(z4(), s);
        const SweepReport report = run_sweep(view, SweepCheck::Quasipolar, sample_indices(view, 200, 99));
        EXPECT_TRUE(report.ok()) << s.name();
    }
}

TEST(ShapeTransport, LocalizedShapesValidateStructurally) {
    std::mt19937_64 rng(23);
    const LocalRing zl = R("Zloc2");
    for (Shape s : {Shape(ShapeTag::L3), Shape(ShapeTag::LOW3), Shape(ShapeTag::UP3), Shape(ShapeTag::S1),
                    Shape(ShapeTag::S2), Shape(ShapeTag::T2)}) {
        for (int i = 0; i < 100; ++i) {
            const ShapedMatrix a = random_matrix(zl, s, rng);
            EXPECT_TRUE(validate_quasipolar_structure(a, decompose(a)).all_passed()) << s.name() << " " << a;
        }
    }
}
