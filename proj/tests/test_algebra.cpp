#include <gtest/gtest.h>

#include <asmkit/asmkit.hpp>

using namespace asmkit;

namespace {

const Cyclo6 A = Cyclo6::zeta6();

CycloLaurent u_var() { return CycloLaurent::monomial(Cyclo6(1), 1); }

}  // namespace

TEST(Rational, MakeRationalCanonicalizes) {
    const BigRational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_THROW(make_rational(1, 0), division_by_zero);
    EXPECT_THROW(inverse(BigRational(0)), division_by_zero);
}

TEST(Rational, Parse) {
    EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
    EXPECT_EQ(parse_rational("7"), BigRational(7));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::exception);
}

TEST(Rational, Binomials) {
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(pow_int(BigInt(3), 4), 81);
}

TEST(Cyclo6, MinimalPolynomialReduction) {
    EXPECT_EQ(A * A, A - Cyclo6(1));
    EXPECT_EQ(A * (Cyclo6(1) - A), Cyclo6(1));
    const Cyclo6 s = Cyclo6(2) * A - Cyclo6(1);
    EXPECT_EQ(s * s, Cyclo6(-3));
    EXPECT_EQ(power(A, 6), Cyclo6(1));
    EXPECT_NE(power(A, 3), Cyclo6(1));
}

TEST(Cyclo6, DivisionAndConjugate) {
    const Cyclo6 z(BigRational(2, 3), BigRational(-5, 7));
    EXPECT_EQ(z / z, Cyclo6(1));
    EXPECT_EQ(z * inverse(z), Cyclo6(1));
    EXPECT_EQ(conj(A), inverse(A));
    EXPECT_TRUE((z * conj(z)).is_rational());
    EXPECT_THROW(inverse(Cyclo6(0)), division_by_zero);
}

TEST(Cyclo6, FieldAxiomsOnSamples) {
    Sampler s(7);
    for (int i = 0; i < 50; ++i) {
        const Cyclo6 x(s.rational(), s.rational()), y(s.rational(), -s.rational()), z(s.rational(), s.rational());
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x / y) * y, x);
    }
}

TEST(Cyclo6, StringForm) {
    EXPECT_EQ(Cyclo6(BigRational(1, 2), BigRational(-3)).str(), "1/2-3*a");
    EXPECT_EQ(Cyclo6(0).str(), "0");
}

TEST(Field, Sigma) {
    EXPECT_EQ(sigma(Cyclo6(1)), Cyclo6(0));
    EXPECT_EQ(sigma(A), Cyclo6(2) * A - Cyclo6(1));
    EXPECT_EQ(sigma(A) * sigma(A), Cyclo6(-3));
    EXPECT_EQ(sigma(BigRational(2)), BigRational(3, 2));
    EXPECT_EQ(sigma(BigRational(1, 2)), BigRational(-3, 2));
}

TEST(Field, Alpha) {
    EXPECT_EQ(alpha(Cyclo6(2), A), Cyclo6(BigRational(-21, 4)));
    EXPECT_EQ(alpha_zeta6(Cyclo6(2)), Cyclo6(BigRational(-21, 4)));
    EXPECT_EQ(alpha(Cyclo6(1), A), Cyclo6(-3));
    EXPECT_EQ(alpha(A, A), Cyclo6(0));
    Sampler s(11);
    for (int i = 0; i < 30; ++i) {
        const Cyclo6 x(s.rational());
        if (x == Cyclo6(1)) continue;
        EXPECT_EQ(alpha(x, A), alpha_zeta6(x));
    }
}

TEST(Field, PowerNegativeExponent) {
    EXPECT_EQ(power(BigRational(2), -3), BigRational(1, 8));
    EXPECT_EQ(power(A, -1), conj(A));
    EXPECT_THROW(power(BigRational(0), -1), division_by_zero);
}

TEST(Poly, Arithmetic) {
    const IntPoly y = IntPoly::x();
    const IntPoly p = (IntPoly(1) + y).pow(3);
    EXPECT_EQ(to_string(p), "[1,3,3,1]");
    EXPECT_EQ(p.evaluate(BigInt(1)), 8);
    EXPECT_EQ(p.coefficient(2), 3);
    EXPECT_EQ(p.coefficient(9), 0);
    EXPECT_EQ(p.degree(), 3);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(Laurent, SubstituteExamples) {
    const CycloLaurent s = CycloLaurent::sigma_monomial(Cyclo6(1), 1);
    EXPECT_EQ(s.substitute(Cyclo6(1), -1), -s);
    const Cyclo6 a2 = A * A;
    EXPECT_EQ(u_var().substitute(a2, 1), CycloLaurent::monomial(a2, 1));
    const CycloLaurent s3 = CycloLaurent::sigma_monomial(Cyclo6(1), 3);
    EXPECT_EQ(s3.substitute(a2, 1), s3);
    EXPECT_THROW(s.substitute(Cyclo6(1), 2), contract_violation);
}

TEST(Laurent, DivisionBySigma) {
    const CycloLaurent s = CycloLaurent::sigma_monomial(Cyclo6(1), 1);
    auto q = (s * s).divide_by_sigma_u(2);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, CycloLaurent(Cyclo6(1)));

    const CycloLaurent s2 = CycloLaurent::sigma_monomial(Cyclo6(1), 2);
    q = s2.divide_by_sigma_u(1);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, u_var() + CycloLaurent::monomial(Cyclo6(1), -1));

    const CycloLaurent s3 = CycloLaurent::sigma_monomial(Cyclo6(1), 3);
    EXPECT_TRUE(s3.divide_by_sigma_u(1));
    EXPECT_FALSE(s3.divide_by_sigma_u(2));
    EXPECT_TRUE(s3.divide_by_sigma_power(3, 1));
    EXPECT_FALSE(CycloLaurent(Cyclo6(5)).divide_by_sigma_u(1));
}

TEST(Laurent, DivisionRoundTrip) {
    Sampler s(5);
    for (int i = 0; i < 10; ++i) {
        CycloLaurent p;
        for (long e = -4; e <= 4; ++e) p.add_term(e, Cyclo6(s.rational(), s.rational()));
        const CycloLaurent s1 = CycloLaurent::sigma_monomial(Cyclo6(1), 1);
        const CycloLaurent prod = p * s1.pow(3);
        auto q = prod.divide_by_sigma_u(3);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, p);
        const Cyclo6 u(s.rational());
        EXPECT_EQ(prod.evaluate(u), p.evaluate(u) * power(sigma(u), 3));
    }
}
