#include <gtest/gtest.h>

#include "support.hpp"

using namespace qp;
using namespace qp::test;

TEST(RingSpec, ParsesEveryKind) {
    EXPECT_EQ(R("F3").kind(), RingKind::PrimeField);
    EXPECT_EQ(R("Z2^2").kind(), RingKind::IntegersModPk);
    EXPECT_EQ(R("Z2^2").modulus(), 4u);
    EXPECT_EQ(R("Zloc2").kind(), RingKind::LocalizedIntegers);
    const LocalRing s = R("series(Z2^2,8)");
    EXPECT_EQ(s.kind(), RingKind::TruncatedSeries);
    EXPECT_EQ(s.precision(), 8u);
    EXPECT_EQ(s.base(), R("Z2^2"));
    EXPECT_EQ(s.prime(), 2u);
}

TEST(RingSpec, CanonicalSpecRoundTrips) {
    for (const char* spec : {"F2", "F3", "Z2^2", "Z2^3", "Z3^2", "Zloc2", "Zloc5", "series(F2,3)", "series(Z2^2,8)",
                             "series(Zloc2,4)", "series(series(F2,2),2)"}) {
        const LocalRing r = R(spec);
        EXPECT_EQ(r.spec(), spec);
        EXPECT_EQ(LocalRing::parse(r.spec()), r);
    }
}

TEST(RingSpec, RejectsMalformedSpecsWithPosition) {
    try {
        R("series(F2,");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 10u);
    }
    EXPECT_THROW(R("Q7"), ParseError);
    EXPECT_THROW(R("F4"), Error);
    EXPECT_THROW(R("Z6^2"), Error);
    EXPECT_THROW(R("F3 junk"), ParseError);
}

TEST(RingArithmetic, AdditionExamples) {
    const LocalRing z4 = R("Z2^2");
    EXPECT_EQ(el(z4, "3") + el(z4, "3"), el(z4, "2"));
    const LocalRing zl = R("Zloc2");
    EXPECT_EQ(el(zl, "1/3") + el(zl, "1/5"), el(zl, "8/15"));
    const LocalRing s = R("series(Z2^2,2)");
    EXPECT_EQ(el(s, "3 + 2*x") + el(s, "2 + 2*x"), el(s, "1"));
}

TEST(RingArithmetic, MultiplicationExamples) {
    const LocalRing z4 = R("Z2^2");
    EXPECT_EQ(el(z4, "2") * el(z4, "2"), z4.zero());
    const LocalRing zl = R("Zloc2");
    EXPECT_EQ(el(zl, "1/3") * el(zl, "3"), zl.one());
    const LocalRing s = R("series(Z2^2,3)");
    EXPECT_EQ(el(s, "1 + 2*x") * el(s, "1 + 2*x"), s.one());
    EXPECT_EQ(-el(z4, "1"), el(z4, "3"));
}

TEST(RingArithmetic, UnitAndRadicalExamples) {
    EXPECT_TRUE(is_unit(el(R("Z2^2"), "3")));
    EXPECT_FALSE(is_unit(el(R("Zloc2"), "2/3")));
    EXPECT_FALSE(is_unit(el(R("series(Z2^2,2)"), "2 + x")));
    EXPECT_TRUE(in_jacobson(el(R("Z2^2"), "2")));
    EXPECT_TRUE(in_jacobson(el(R("Zloc2"), "6/5")));
    EXPECT_FALSE(in_jacobson(el(R("F3"), "2")));
}

TEST(RingArithmetic, InverseExamples) {
    EXPECT_EQ(inverse(el(R("Z2^2"), "3")), el(R("Z2^2"), "3"));
    EXPECT_EQ(inverse(el(R("Zloc2"), "3/5")), el(R("Zloc2"), "5/3"));
    const LocalRing s = R("series(Z2^2,3)");
    const RingElement a = el(s, "3 + 2*x");
    EXPECT_EQ(inverse(a), el(s, "3 + 2*x"));
    EXPECT_EQ(a * inverse(a), s.one());
    EXPECT_THROW(inverse(el(R("Z2^2"), "2")), Error);
}

TEST(RingArithmetic, FractionsNeedUnitDenominators) {
    EXPECT_THROW(R("Zloc2").from_fraction(1, 2), Error);
    EXPECT_EQ(R("Z2^2").from_fraction(1, 3), el(R("Z2^2"), "3"));
    EXPECT_EQ(el(R("Zloc5"), "4/6"), R("Zloc5").from_fraction(2, 3));
    EXPECT_THROW(el(R("Zloc3"), "4/6"), ParseError);
}

TEST(RingArithmetic, SeriesPrecisionMustMatch) {
    EXPECT_THROW(el(R("series(F2,2)"), "1") + el(R("series(F2,3)"), "1"), Error);
    EXPECT_THROW(el(R("F2"), "1") + el(R("F3"), "1"), Error);
}

TEST(RingEnumeration, CountsAndOrder) {
    EXPECT_EQ(R("Z2^2").enumerate().size(), 4u);
    EXPECT_EQ(R("series(F2,2)").enumerate().size(), 4u);
    EXPECT_EQ(R("series(Z2^2,2)").order(), 16u);
    EXPECT_THROW(R("Zloc2").enumerate(), Error);
    EXPECT_THROW(R("series(Zloc2,2)").order(), Error);
    for (const char* spec : {"F3", "Z2^3", "series(F2,3)", "series(series(F2,2),2)"}) {
        const LocalRing r = R(spec);
        const auto all = r.enumerate();
        EXPECT_TRUE(all[0].is_zero());
        for (std::uint64_t i = 0; i < all.size(); ++i) {
            EXPECT_EQ(r.element_at(i), all[i]);
            EXPECT_EQ(r.index_of(all[i]), i);
        }
    }
}

class FiniteRings : public ::testing::TestWithParam<const char*> {};

TEST_P(FiniteRings, LocalDichotomyAndRadicalIsAnIdeal) {
    const LocalRing r = R(GetParam());
    const auto all = r.enumerate();
    for (const auto& a : all) {
        EXPECT_NE(is_unit(a), in_jacobson(a));
        for (const auto& b : all) {
            if (in_jacobson(a) && in_jacobson(b)) EXPECT_TRUE(in_jacobson(a + b));
            if (in_jacobson(a)) EXPECT_TRUE(in_jacobson(a * b));
        }
    }
}

TEST_P(FiniteRings, UnitTestMatchesInverseSearch) {
    const LocalRing r = R(GetParam());
    const auto all = r.enumerate();
    for (const auto& a : all) {
        bool found = false;
        for (const auto& b : all) found = found || (a * b).is_one();
        EXPECT_EQ(is_unit(a), found) << a;
        if (found) {
            EXPECT_TRUE((a * inverse(a)).is_one());
            EXPECT_EQ(inverse(inverse(a)), a);
        }
    }
}

TEST_P(FiniteRings, RingAxiomsHold) {
    const LocalRing r = R(GetParam());
    const auto all = r.enumerate();
    ASSERT_LE(all.size(), 64u);
    for (const auto& a : all) {
        EXPECT_EQ(r.one() * a, a);
        EXPECT_EQ(a + r.zero(), a);
        EXPECT_TRUE((a + -a).is_zero());
        for (const auto& b : all) {
            EXPECT_EQ(a * b, b * a);
            for (const auto& c : all) {
                EXPECT_EQ((a * b) * c, a * (b * c));
                EXPECT_EQ(a * (b + c), a * b + a * c);
            }
        }
    }
}

TEST_P(FiniteRings, PrintedElementsParseBack) {
    const LocalRing r = R(GetParam());
    if (r.kind() == RingKind::TruncatedSeries && r.base().kind() == RingKind::TruncatedSeries) GTEST_SKIP();
    for (const auto& a : r.enumerate()) EXPECT_EQ(r.parse_element(a.to_string()), a) << a;
}

INSTANTIATE_TEST_SUITE_P(Small, FiniteRings,
                         ::testing::Values("F2", "F3", "F5", "Z2^2", "Z2^3", "Z3^2", "series(F2,2)", "series(F2,3)",
                                           "series(Z2^2,2)", "series(F3,2)", "series(series(F2,2),2)"));

TEST(RingLiterals, SeriesSyntax) {
    const LocalRing s = R("series(Z2^2,8)");
    const RingElement a = el(s, "2 + 2*x + 3*x^9");
    EXPECT_EQ(a, el(s, "2 + 2*x"));
    EXPECT_EQ(el(s, "x^2 - x"), el(s, "3*x + x^2"));
    EXPECT_EQ(el(s, "1 + -2*x"), el(s, "1 + 2*x"));
    EXPECT_EQ(el(s, "x").to_string(), "x");
    EXPECT_EQ(el(s, "1 + 3*x^2").coefficient(2), el(R("Z2^2"), "3"));
    EXPECT_EQ(el(R("series(Zloc2,3)"), "1/3 + x").coefficient(0), el(R("Zloc2"), "1/3"));
}

TEST(RingLiterals, ErrorsCarryPositions) {
    try {
        el(R("Z2^2"), "1 + x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    try {
        el(R("F3"), "1 + + ");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(el(R("Zloc2"), "1/2"), ParseError);
    EXPECT_THROW(el(R("F3"), ""), ParseError);
}

TEST(RingLocalized, RandomFieldIdentities) {
    std::mt19937_64 rng(7);
    for (const char* spec : {"Zloc2", "Zloc3", "Zloc5"}) {
        const LocalRing r = R(spec);
        for (int i = 0; i < 300; ++i) {
            const RingElement a = random_localized(r, rng, 1000);
            const RingElement b = random_localized(r, rng, 1000);
            EXPECT_NE(is_unit(a), in_jacobson(a));
            EXPECT_EQ(r.parse_element(a.to_string()), a);
            EXPECT_EQ((a + b) - b, a);
            if (is_unit(b)) EXPECT_EQ(a * b * inverse(b), a);
            const Fraction& f = a.fraction();
            EXPECT_GT(f.den, 0);
            EXPECT_EQ(boost::multiprecision::gcd(f.num, f.den), f.num == 0 ? f.den : BigInt(1));
        }
    }
}

TEST(RingSeries, UnitCriterionMatchesBruteForce) {
    const LocalRing s = R("series(F2,3)");
    const auto all = s.enumerate();
    for (const auto& a : all) {
        bool found = false;
        for (const auto& b : all) found = found || (a * b).is_one();
        EXPECT_EQ(is_unit(a), found);
        EXPECT_EQ(is_unit(a), is_unit(a.constant_term()));
    }
}

TEST(RingSeries, InverseOfOnePlusX) {
    const LocalRing s = R("series(F2,4)");
    EXPECT_EQ(inverse(el(s, "1 + x")), el(s, "1 + x + x^2 + x^3"));
    const LocalRing zs = R("series(Zloc2,3)");
    const RingElement a = el(zs, "3 + 2*x + 1/5*x^2");
    EXPECT_TRUE((a * inverse(a)).is_one());
}

TEST(RingMisc, ExactSquareRoot) {
    EXPECT_EQ(*exact_sqrt(49), 7);
    EXPECT_EQ(*exact_sqrt(0), 0);
    EXPECT_FALSE(exact_sqrt(-7).has_value());
    EXPECT_FALSE(exact_sqrt(8).has_value());
    BigInt big = BigInt(1) << 200;
    EXPECT_EQ(*exact_sqrt(big * big), big);
}

TEST(RingMisc, PowerMatchesRepeatedProduct) {
    const LocalRing z8 = R("Z2^3");
    const RingElement three = el(z8, "3");
    RingElement acc = z8.one();
    for (unsigned n = 0; n < 10; ++n) {
        EXPECT_EQ(pow(three, n), acc);
        acc *= three;
    }
}
