#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zxf/errors.hpp"
#include "zxf/polynomial.hpp"

using namespace zxf;

namespace {
const IntPoly kSquare{49, 98, 63, 14, 1};  // (7 + 7x + x^2)^2
}

TEST(IntPoly, CanonicalForm) {
    IntPoly f{3, 0, 0};
    EXPECT_EQ(f.degree(), 0);
    EXPECT_TRUE(IntPoly({0, 0}).is_zero());
    EXPECT_EQ(IntPoly().degree(), -1);
    EXPECT_EQ(IntPoly({1, 2}) - IntPoly({1, 2}), IntPoly());
}

TEST(Eval, Examples) {
    EXPECT_EQ(eval(IntPoly{6, 1, 1}, 0), 6);
    EXPECT_EQ(eval(kSquare, -7), 49);
    EXPECT_EQ(eval(IntPoly{0, 0, 0, 1}, 10), 1000);
    EXPECT_EQ(eval_mod(IntPoly{1, 0, 1}, 3, 7), 3);
}

TEST(Derivative, Examples) {
    EXPECT_EQ(derivative(kSquare), (IntPoly{98, 126, 42, 4}));
    EXPECT_TRUE(derivative(IntPoly{5}).is_zero());
    EXPECT_EQ(derivative(IntPoly{4, 4, 3, 1}), (IntPoly{4, 6, 3}));
}

TEST(GcdZ, Examples) {
    EXPECT_EQ(gcd_Z(kSquare, derivative(kSquare)), (IntPoly{7, 7, 1}));
    EXPECT_EQ(gcd_Z(IntPoly{0, 0, 1}, IntPoly{0, 1}), (IntPoly{0, 1}));
    EXPECT_EQ(gcd_Z(IntPoly{4, 4, 1}, IntPoly{4, 2}), (IntPoly{2, 1}));
    EXPECT_EQ(gcd_Z(IntPoly{6, 6}, IntPoly{4}), (IntPoly{2}));
    EXPECT_EQ(gcd_Z(IntPoly{-3, -1}, IntPoly()), (IntPoly{3, 1}));
}

TEST(GcdZ, DividesBothInputs) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const IntPoly f = oracle::random_poly(rng, 6, 50), g = oracle::random_poly(rng, 6, 50);
        if (f.is_zero() && g.is_zero()) continue;
        const IntPoly d = gcd_Z(f, g);
        EXPECT_TRUE(try_divide(f, d).has_value());
        EXPECT_TRUE(try_divide(g, d).has_value());
        EXPECT_GT(d.leading(), 0);
    }
}

TEST(GcdZ, CommonFactorScales) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const IntPoly f = oracle::random_poly(rng, 4, 20), g = oracle::random_poly(rng, 4, 20);
        IntPoly h = oracle::random_poly(rng, 3, 9);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        h = primitive_part(h);
        const IntPoly lhs = gcd_Z(f * h, g * h);
        const IntPoly rhs = gcd_Z(f, g) * h;
        EXPECT_TRUE(lhs == rhs || lhs == -rhs) << i;
    }
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(IntPoly{8, 2, 1}), -28);
    EXPECT_EQ(discriminant(IntPoly{0, 0, 1}), 0);
    EXPECT_EQ(discriminant(IntPoly{4, 8, 5, 1}), 0);
    EXPECT_THROW(discriminant(IntPoly{3}), DomainError);
}

TEST(Discriminant, ClosedFormsAgreeWithResultant) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const IntPoly f = oracle::random_poly(rng, 5, 30);
        if (f.degree() < 1) continue;
        EXPECT_EQ(discriminant(f), discriminant_by_resultant(f)) << i;
        if (f.degree() == 2 || f.degree() == 3) EXPECT_EQ(discriminant(f), oracle::discriminant_closed(f));
    }
}

TEST(Discriminant, ZeroIffRepeatedFactorExhaustive) {
    // Every polynomial of degree 1..3 with coefficients in [-9, 9].
    for (int a = -9; a <= 9; ++a)
        for (int b = -9; b <= 9; ++b)
            for (int c = -9; c <= 9; ++c)
                for (int d = -9; d <= 9; ++d) {
                    const IntPoly f{a, b, c, d};
                    if (f.degree() < 1) continue;
                    const bool repeated = gcd_Z(f, derivative(f)).degree() >= 1;
                    ASSERT_EQ(discriminant(f) == 0, repeated) << a << ' ' << b << ' ' << c << ' ' << d;
                }
}

TEST(SquarefreePart, Examples) {
    EXPECT_EQ(squarefree_part(kSquare), (IntPoly{7, 7, 1}));
    EXPECT_EQ(squarefree_part(IntPoly{6, 1, 1}), (IntPoly{6, 1, 1}));
    EXPECT_EQ(squarefree_part(IntPoly{0, 0, 0, 1}), (IntPoly{0, 1}));
}

TEST(Resultant, Basics) {
    // Res(x - a, x - b) = b - a up to the Sylvester sign convention.
    EXPECT_EQ(abs(resultant(IntPoly{-2, 1}, IntPoly{-5, 1})), 3);
    EXPECT_EQ(resultant(IntPoly{1, 0, 1}, IntPoly{-1, 0, 1}), 4);
    EXPECT_EQ(resultant(IntPoly{4, 4, 1}, IntPoly{4, 2}), 0);
}

TEST(Eval, RingHomomorphism) {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> pt(-1000, 1000);
    for (int i = 0; i < 300; ++i) {
        const IntPoly f = oracle::random_poly(rng, 6, 50), g = oracle::random_poly(rng, 6, 50);
        const Integer x = pt(rng);
        EXPECT_EQ(eval(f * g, x), eval(f, x) * eval(g, x));
        EXPECT_EQ(eval(f + g, x), eval(f, x) + eval(g, x));
    }
}

TEST(Division, ExactAndInexact) {
    EXPECT_EQ(divide_exact(IntPoly{4, 8, 3}, IntPoly{2, 1}), (IntPoly{2, 3}));
    EXPECT_FALSE(try_divide(IntPoly{4, 8, 3}, IntPoly{3, 1}).has_value());
    EXPECT_FALSE(try_divide(IntPoly{1, 1}, IntPoly{0, 2}).has_value());
    EXPECT_THROW(divide_exact(IntPoly{1, 1}, IntPoly{0, 2}), ContractViolation);
}

TEST(PowerOfX, Strip) {
    auto [h, t] = strip_power_of_x(IntPoly{0, 0, 2, 1});
    EXPECT_EQ(h, (IntPoly{2, 1}));
    EXPECT_EQ(t, 2u);
}
