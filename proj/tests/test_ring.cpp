#include "qboson/laurent.hpp"
#include "qboson/poly.hpp"
#include "qboson/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qboson;

namespace {

constexpr int kIterations = 300;

Rational random_rational(std::mt19937& rng) {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 12) + 1;
    return Rational(num, den);
}

Poly random_poly(std::mt19937& rng) {
    int deg = static_cast<int>(rng() % 5);
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(random_rational(rng));
    return Poly(std::move(cs));
}

Laurent<Rational> random_laurent(std::mt19937& rng) {
    Laurent<Rational> l;
    int terms = static_cast<int>(rng() % 4) + 1;
    for (int i = 0; i < terms; ++i) {
        int k = static_cast<int>(rng() % 9) - 4;
        l.add_term(k, random_rational(rng));
    }
    return l;
}

}  // namespace

TEST(Rational, BasicArithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 2), Rational(1));
    EXPECT_EQ(Rational(7, 7), Rational(1));
    EXPECT_EQ((-Rational(3, 4)).str(), "-3/4");
    EXPECT_EQ(Rational(10, 4).str(), "5/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, Pow) {
    EXPECT_EQ(Rational(3, 2).pow(2), Rational(9, 4));
    EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(Rational, FromString) {
    EXPECT_EQ(Rational::from_string("5/6"), Rational(5, 6));
    EXPECT_EQ(Rational::from_string("-3"), Rational(-3));
    EXPECT_EQ(Rational::from_string("6/4"), Rational(3, 2));
    EXPECT_THROW(Rational::from_string("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::from_string("a/b"), std::invalid_argument);
    EXPECT_THROW(Rational::from_string(""), std::invalid_argument);
    EXPECT_THROW(Rational::from_string("1/0"), std::domain_error);
}

TEST(Rational, DivisionByZero) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Poly, BasicArithmetic) {
    Poly t = Poly::t();
    Poly a = Poly(1) - t;               // 1 - t
    Poly b = Poly(1) - t * t;           // 1 - t^2
    EXPECT_EQ((a + b).str(), "2 - t - t^2");
    EXPECT_EQ((Poly(1) - t) * (Poly(1) + t), b);
    EXPECT_EQ(a.eval(Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_EQ((a - a), Poly());
}

TEST(Poly, ExactDivision) {
    Poly t = Poly::t();
    Poly num = Poly(1) - t.pow(4);
    Poly d = Poly(1) - t;
    EXPECT_EQ(Poly::div_exact(num, d), Poly(1) + t + t * t + t.pow(3));
    EXPECT_THROW(Poly::div_exact(Poly(1) + t, t), std::domain_error);
    EXPECT_THROW(Poly::div_exact(Poly(1), Poly()), std::domain_error);
}

TEST(Poly, Render) {
    Poly t = Poly::t();
    EXPECT_EQ((Poly(1) - t).str(), "1 - t");
    EXPECT_EQ((t * Rational(1, 2)).str(), "1/2*t");
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ((-t).str(), "-t");
}

TEST(Laurent, BasicArithmetic) {
    auto u = Laurent<Rational>::u();
    auto uinv = Laurent<Rational>::u(-1);
    EXPECT_EQ((u * uinv), Laurent<Rational>(1));
    EXPECT_EQ((uinv + u).str(), "u^-1 + u");
    EXPECT_EQ((u + uinv).eval(Rational(2)), Rational(5, 2));
    EXPECT_EQ(Laurent<Rational>(1).eval(Rational(7)), Rational(1));
    EXPECT_EQ((u * u).eval(Rational(3, 2)), Rational(9, 4));
}

TEST(Laurent, EvalAtZero) {
    auto u = Laurent<Rational>::u();
    EXPECT_EQ((u + Laurent<Rational>(3)).eval(Rational(0)), Rational(3));
    EXPECT_THROW(Laurent<Rational>::u(-1).eval(Rational(0)), std::domain_error);
}

TEST(Laurent, PolyCoefficients) {
    Poly t = Poly::t();
    auto l = Laurent<Poly>::term(2, Poly(1) - t) + Laurent<Poly>::term(-1, Poly(1));
    EXPECT_EQ(l.coeff(2), Poly(1) - t);
    EXPECT_EQ(l.eval(Rational(2)), Poly(Rational(1, 2)) + (Poly(1) - t) * Poly(Rational(4)));
    EXPECT_EQ(l.str(), "u^-1 + (1 - t)*u^2");
    EXPECT_EQ(l.substitute_inverse().coeff(-2), Poly(1) - t);
}

TEST(RingAxioms, RationalRandomized) {
    std::mt19937 rng(12345);
    for (int i = 0; i < kIterations; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(RingAxioms, PolyRandomized) {
    std::mt19937 rng(54321);
    for (int i = 0; i < kIterations; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(RingAxioms, LaurentRandomized) {
    std::mt19937 rng(99);
    for (int i = 0; i < kIterations; ++i) {
        auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(RingAxioms, LaurentEvalIsHomomorphism) {
    std::mt19937 rng(2024);
    for (int i = 0; i < kIterations; ++i) {
        auto a = random_laurent(rng), b = random_laurent(rng);
        Rational u0 = Rational(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 7) + 1);
        EXPECT_EQ((a * b).eval(u0), a.eval(u0) * b.eval(u0));
        EXPECT_EQ((a + b).eval(u0), a.eval(u0) + b.eval(u0));
    }
}
