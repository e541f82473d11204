#include <gtest/gtest.h>

#include <random>

#include "kset/cyclo.hpp"
#include "kset/errors.hpp"
#include "oracle/oracle.hpp"

using kset::CycNum;
using kset::parse_scalar;

namespace {

CycNum z(long k) { return CycNum::zeta(k); }

CycNum random_element(std::mt19937& rng, bool rationals = false) {
    std::uniform_int_distribution<int> coef(-10, 10);
    std::uniform_int_distribution<int> den(1, 6);
    std::array<kset::Rational, 8> c;
    for (auto& x : c) {
        x = coef(rng);
        if (rationals) {
            x /= den(rng);
            x.canonicalize();
        }
    }
    return CycNum::from_coeffs(c);
}

void expect_close(oracle::cplx a, oracle::cplx b) { EXPECT_LT(std::abs(a - b), 1e-9 * (1 + std::abs(b))); }

}  // namespace

TEST(Cyclo, AdditiveInverse) { EXPECT_TRUE((CycNum(1) + CycNum(-1)).is_zero()); }

TEST(Cyclo, OmegaPlusConjugateIsMinusOne) {
    CycNum sum = z(8) + z(16);
    EXPECT_EQ(sum, CycNum(-1));
    expect_close(oracle::ev(sum), oracle::zeta_power(8) + oracle::zeta_power(16));
}

TEST(Cyclo, ZeroIsAdditiveIdentity) {
    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
        CycNum x = random_element(rng, true);
        EXPECT_EQ(CycNum(0) + x, x);
    }
}

TEST(Cyclo, PowersReduce) {
    EXPECT_EQ(z(12) * z(12), CycNum(1));
    EXPECT_EQ(z(4) * z(4), z(4) - CycNum(1));
    EXPECT_EQ(z(12), CycNum(-1));
    EXPECT_EQ(z(24), CycNum(1));
    for (int k = -30; k < 60; ++k) expect_close(oracle::ev(z(k)), oracle::zeta_power(k));
}

TEST(Cyclo, NamedElements) {
    EXPECT_EQ(CycNum::sqrt2() * CycNum::sqrt2(), CycNum(2));
    EXPECT_EQ(CycNum::sqrt3() * CycNum::sqrt3(), CycNum(3));
    EXPECT_EQ(CycNum::sqrt2(), z(3) + z(1) - z(5));
    expect_close(oracle::ev(CycNum::sqrt2()), std::sqrt(2.0));
    expect_close(oracle::ev(CycNum::sqrt3()), std::sqrt(3.0));
}

TEST(Cyclo, Conjugation) {
    EXPECT_EQ(CycNum(kset::Rational(3, 7)).conj(), CycNum(kset::Rational(3, 7)));
    EXPECT_EQ(z(8).conj(), -z(4));
    std::mt19937 rng(2);
    for (int i = 0; i < 50; ++i) {
        CycNum x = random_element(rng, true);
        EXPECT_EQ(x.conj().conj(), x);
        expect_close(oracle::ev(x.conj()), std::conj(oracle::ev(x)));
    }
}

TEST(Cyclo, Inverse) {
    EXPECT_EQ(CycNum(2).inv(), CycNum(kset::Rational(1, 2)));
    EXPECT_EQ(z(5).inv(), z(19));
    CycNum y = (CycNum(1) + z(4)).inv();
    EXPECT_EQ((CycNum(1) + z(4)) * y, CycNum(1));
    EXPECT_THROW(CycNum(0).inv(), kset::ZeroDivision);
}

TEST(Cyclo, ZeroTest) {
    EXPECT_TRUE(CycNum(0).is_zero());
    EXPECT_TRUE((z(8) + z(16) + CycNum(1)).is_zero());
    EXPECT_FALSE(z(1).is_zero());
}

TEST(Cyclo, RealAndRational) {
    EXPECT_TRUE(CycNum::sqrt2().is_real());
    EXPECT_FALSE(CycNum::sqrt2().is_rational());
    EXPECT_TRUE(CycNum(5).is_rational());
    EXPECT_FALSE(z(4).is_real());
}

TEST(Cyclo, FieldAxiomsRandomized) {
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        CycNum a = random_element(rng), b = random_element(rng, true), c = random_element(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
        CycNum n = a * a.conj();
        EXPECT_EQ(n.conj(), n);
        if (!a.is_zero()) EXPECT_EQ(a * a.inv(), CycNum(1));
        expect_close(oracle::ev(a * b), oracle::ev(a) * oracle::ev(b));
        expect_close(oracle::ev(a - b), oracle::ev(a) - oracle::ev(b));
    }
}

TEST(Cyclo, Pow) {
    EXPECT_EQ(z(1).pow(24), CycNum(1));
    EXPECT_EQ(z(3).pow(5), z(15));
    EXPECT_EQ(CycNum(7).pow(0), CycNum(1));
}

TEST(Scalar, ParsesAliases) {
    EXPECT_EQ(parse_scalar("w3"), z(8));
    EXPECT_EQ(parse_scalar("W3"), -z(4));
    EXPECT_EQ(parse_scalar("w6"), z(4));
    EXPECT_EQ(parse_scalar("w6^5"), z(20));
    EXPECT_EQ(parse_scalar("s2"), CycNum::sqrt2());
    EXPECT_EQ(parse_scalar("-s2"), -CycNum::sqrt2());
    EXPECT_EQ(parse_scalar("s3"), CycNum::sqrt3());
}

TEST(Scalar, ParsesTerms) {
    EXPECT_EQ(parse_scalar("0"), CycNum(0));
    EXPECT_EQ(parse_scalar("-5"), CycNum(-5));
    EXPECT_EQ(parse_scalar("1/2"), CycNum(kset::Rational(1, 2)));
    EXPECT_EQ(parse_scalar("-1+z^4"), z(4) - CycNum(1));
    EXPECT_EQ(parse_scalar("3/2z^3-z"), CycNum(kset::Rational(3, 2)) * z(3) - z(1));
    EXPECT_EQ(parse_scalar("z"), z(1));
    EXPECT_EQ(parse_scalar("2w3"), CycNum(2) * z(8));
}

TEST(Scalar, RejectsMalformed) {
    for (const char* bad : {"", "+", "1/0", "z^", "q", "1 2", "1/", "w7", "2/-3", "z^^2", "1+"}) {
        EXPECT_THROW(parse_scalar(bad), kset::SyntaxError) << bad;
    }
}

TEST(Scalar, ReportsColumn) {
    try {
        parse_scalar("1+q");
        FAIL();
    } catch (const kset::SyntaxError& e) {
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(Scalar, FormatsMinimally) {
    EXPECT_EQ(kset::format_scalar(CycNum(kset::Rational(1, 2))), "1/2");
    EXPECT_EQ(kset::format_scalar(-z(4)), "-z^4");
    EXPECT_EQ(kset::format_scalar(z(8)), "z^8");
    EXPECT_EQ(kset::format_scalar(CycNum::sqrt2()), "s2");
    EXPECT_EQ(kset::format_scalar(CycNum(0)), "0");
    EXPECT_EQ(kset::format_scalar(CycNum(-3)), "-3");
}

TEST(Scalar, FormatRoundTrips) {
    std::mt19937 rng(4);
    for (int i = 0; i < 200; ++i) {
        CycNum x = random_element(rng, true);
        EXPECT_EQ(parse_scalar(kset::format_scalar(x)), x);
    }
    for (int k = 0; k < 24; ++k) EXPECT_EQ(parse_scalar(kset::format_scalar(z(k))), z(k));
}

TEST(Cyclo, GaloisAutomorphisms) {
    std::mt19937 rng(8);
    for (long k : {1L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        EXPECT_EQ(z(1).galois(k), z(k));
        for (int i = 0; i < 30; ++i) {
            CycNum a = random_element(rng, true), b = random_element(rng, true);
            EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
            EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
        }
    }
    CycNum a = random_element(rng, true);
    EXPECT_EQ(a.galois(23), a.conj());
}
