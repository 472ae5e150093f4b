#include "uqs/coeffs/fields.hpp"
#include "uqs/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace uqs;

namespace {

LaurentQ random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-4, 4), c(-5, 5), n(0, 4);
    LaurentQ r;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) r += LaurentQ::monomial(e(rng), Rational(c(rng), 1 + n(rng)));
    return r;
}

RationalQ random_ratfunc(std::mt19937& rng) {
    LaurentQ d = random_laurent(rng);
    if (d.is_zero()) d = LaurentQ(1);
    return RationalQ(random_laurent(rng), d);
}

// Symmetric q-Pascal rule, independent of polynomial division.
LaurentQ pascal_binomial(int m, int n) {
    if (n == 0 || n == m) return LaurentQ(1);
    return pascal_binomial(m - 1, n).shifted(-n) + pascal_binomial(m - 1, n - 1).shifted(m - n);
}

}  // namespace

TEST(QNumbers, SmallValues) {
    EXPECT_EQ(q_number(1), LaurentQ(1));
    EXPECT_EQ(q_factorial(0), LaurentQ(1));
    EXPECT_EQ(q_number(3), LaurentQ::parse("q^2 + 1 + q^-2"));
    EXPECT_EQ(q_number(0), LaurentQ());
    EXPECT_EQ(q_number(-2), -q_number(2));
}

TEST(QNumbers, BinomialFourTwo) {
    EXPECT_EQ(q_binomial(4, 2), LaurentQ::parse("q^4 + q^2 + 2 + q^-2 + q^-4"));
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= m; ++n) EXPECT_EQ(q_binomial(m, n), pascal_binomial(m, n)) << m << " " << n;
}

TEST(QNumbers, DefiningQuotient) {
    for (int n = 0; n < 7; ++n) {
        LaurentQ lhs = q_number(n) * (LaurentQ::q(1) - LaurentQ::q(-1));
        EXPECT_EQ(lhs, LaurentQ::q(n) - LaurentQ::q(-n));
    }
}

TEST(QNumbers, OutOfRange) {
    EXPECT_THROW(q_factorial(-1), InvalidArgument);
    EXPECT_THROW(q_binomial(2, 3), InvalidArgument);
}

TEST(Laurent, ParsePrintRoundTrip) {
    LaurentQ x = LaurentQ::parse("3*q^2 - q^-1");
    EXPECT_EQ(x.to_string(), "3*q^2 - q^-1");
    EXPECT_EQ(x.coeff(2), 3);
    EXPECT_EQ(x.coeff(-1), -1);
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentQ y = random_laurent(rng);
        EXPECT_EQ(LaurentQ::parse(y.to_string()), y);
    }
    EXPECT_THROW(LaurentQ::parse("3*x"), InvalidArgument);
}

TEST(Laurent, RingAxioms) {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        LaurentQ a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(RationalFunction, FieldAxiomsAndCanonicalForm) {
    std::mt19937 rng(13);
    for (int i = 0; i < 150; ++i) {
        RationalQ a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ(RationalQ::parse(a.to_string()), a);
    }
    RationalQ x(q_number(2) * q_number(3), q_number(2) * LaurentQ::q(5));
    EXPECT_TRUE(x.is_laurent());
    EXPECT_EQ(x.num(), q_number(3).shifted(-5));
}

TEST(Cyclotomic, PolynomialProducts) {
    // x^m - 1 is the product of Phi_d over divisors d of m.
    for (int m = 1; m <= 15; ++m) {
        QPoly prod = QPoly::constant(1);
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod = prod * cyclotomic_polynomial(d);
        EXPECT_EQ(prod, QPoly::monomial(m) - QPoly::constant(1)) << m;
        EXPECT_EQ(cyclotomic_polynomial(m).degree(), euler_phi(m));
    }
    EXPECT_EQ(cyclotomic_polynomial(3), QPoly({1, 1, 1}));
}

TEST(Cyclotomic, SpecializeExamples) {
    for (int m : {3, 5, 7}) {
        EXPECT_TRUE(specialize(q_number(m), m).is_zero());
        for (int k = 1; k < m; ++k) EXPECT_FALSE(specialize(q_number(k), m).is_zero()) << m << " " << k;
    }
    CyclotomicScalar e = specialize(LaurentQ::q(1), 3);
    EXPECT_EQ(e * e, CyclotomicScalar(-1) - e);
    EXPECT_EQ(e.pow(3), CyclotomicScalar(1));
}

TEST(Cyclotomic, SerializationRoundTrip) {
    CyclotomicScalar x = CyclotomicScalar::parse("2 + e + 0*e^2 (m=5)");
    EXPECT_EQ(x, CyclotomicScalar(2) + CyclotomicScalar::root_power(5, 1));
    EXPECT_EQ(x.to_string(), "2 + e + 0*e^2 + 0*e^3 (m=5)");
    EXPECT_EQ(CyclotomicScalar::parse(x.to_string()), x);
    EXPECT_THROW(CyclotomicScalar::parse("1 + e"), InvalidArgument);
}

TEST(Cyclotomic, FieldAxioms) {
    std::mt19937 rng(17);
    for (int m : {3, 5, 7, 9}) {
        for (int i = 0; i < 60; ++i) {
            CyclotomicScalar a = specialize(random_laurent(rng), m), b = specialize(random_laurent(rng), m),
                             c = specialize(random_laurent(rng), m);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(Specialize, IsRingHomomorphism) {
    std::mt19937 rng(19);
    for (int m : {3, 5, 7}) {
        for (int i = 0; i < 80; ++i) {
            LaurentQ a = random_laurent(rng), b = random_laurent(rng);
            EXPECT_EQ(specialize(a * b, m), specialize(a, m) * specialize(b, m));
            EXPECT_EQ(specialize(a + b, m), specialize(a, m) + specialize(b, m));
            RationalQ r = random_ratfunc(rng), s = random_ratfunc(rng);
            try {
                EXPECT_EQ(specialize(r * s, m), specialize(r, m) * specialize(s, m));
            } catch (const SpecializationError&) {
            }
        }
    }
}

TEST(Specialize, VanishingDenominatorIsReported) {
    RationalQ x(LaurentQ(1), q_number(3));
    EXPECT_THROW(specialize(x, 3), SpecializationError);
    try {
        specialize(x, 3);
    } catch (const SpecializationError& err) {
        EXPECT_EQ(err.order(), 3);
        EXPECT_FALSE(err.denominator().empty());
    }
    EXPECT_NO_THROW(specialize(x, 5));
}
