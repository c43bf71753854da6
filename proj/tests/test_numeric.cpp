#include "oracles.hpp"
#include "phidyn/numeric.hpp"

#include <doctest.h>

using namespace phidyn;
using oracle::q;

TEST_SUITE("numeric") {

TEST_CASE("extended rationals reduce and order with inf on top") {
    CHECK(ExtendedRational(6, 4).str() == "3/2");
    CHECK(ExtendedRational(0, 7).str() == "0/1");
    CHECK(ExtendedRational(5, 0).str() == "1/0");
    CHECK(ExtendedRational(1, 2) < ExtendedRational(2, 3));
    CHECK(ExtendedRational(1000000, 1) < ExtendedRational::infinity());
    CHECK_THROWS_AS(ExtendedRational(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ExtendedRational(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(ExtendedRational::infinity().to_rational(), std::domain_error);
}

TEST_CASE("phi on the special points") {
    CHECK(phi_rat(ExtendedRational(0, 1)) == ExtendedRational::infinity());
    CHECK(phi_rat(ExtendedRational::infinity()) == ExtendedRational(1, 1));
    CHECK(phi_rat(ExtendedRational(1, 1)) == ExtendedRational(0, 1));
    CHECK(phi_rat(ExtendedRational(1, 2)) == ExtendedRational(1, 1));
    CHECK(phi_rat(ExtendedRational(2, 1)) == ExtendedRational(1, 2));
}

TEST_CASE("phi agrees with the direct formula") {
    oracle::Gen g(11);
    for (int i = 0; i < 500; ++i) {
        const Rational x = g.positive(300);
        CHECK(phi_rat(ExtendedRational::from_rational(x)).to_rational() == oracle::phi(x));
    }
}

TEST_CASE("surd canonical form") {
    const QuadraticSurd a(BigInt(-2), BigInt(2), BigInt(20), BigInt(4));  // (-2 + 2*sqrt 20)/4 = (-1 + 2 sqrt 5)/2
    CHECK(a.str() == "(-1+2√5)/2");
    const QuadraticSurd b(BigInt(3), BigInt(1), BigInt(9), BigInt(2));  // (3 + 3)/2 = 3
    CHECK(b.is_rational());
    CHECK(b.rational_value() == 3);
    CHECK(QuadraticSurd(BigInt(1), BigInt(1), BigInt(5), BigInt(-2)).str() == "(-1-1√5)/2");
    const QuadraticSurd golden(BigInt(-1), BigInt(1), BigInt(5), BigInt(2));
    CHECK(golden.sign() > 0);
    CHECK(golden.compare(q(61803, 100000)) > 0);
    CHECK(golden.compare(q(61804, 100000)) < 0);
    CHECK(std::fabs(static_cast<double>(golden.to_long_double()) - 0.6180339887498949) < 1e-15);
}

TEST_CASE("surd arithmetic identities") {
    const QuadraticSurd s(BigInt(-1), BigInt(1), BigInt(5), BigInt(2));
    CHECK(s * s + s == QuadraticSurd::from_rational(1));  // x^2 + x - 1 = 0
    CHECK((s * s.inverse()).is_rational());
    CHECK((s * s.inverse()).rational_value() == 1);
    CHECK((s - s).sign() == 0);
    CHECK((s / s).rational_value() == 1);
}

TEST_CASE("the golden fixed point is fixed by phi") {
    const QuadraticSurd z(BigInt(-1), BigInt(1), BigInt(5), BigInt(2));
    CHECK(phi_surd(z) == z);
    const QuadraticSurd w(BigInt(3), BigInt(1), BigInt(5), BigInt(2));
    CHECK(phi_surd(w) == z);
}

TEST_CASE("branch inverses undo phi") {
    oracle::Gen g(12);
    for (int i = 0; i < 200; ++i) {
        const ExtendedRational y = ExtendedRational::from_rational(g.positive(100));
        const ExtendedRational x0 = MobiusMap::branch_inverse(0).apply(y);
        CHECK(x0 <= ExtendedRational(1, 1));
        CHECK(phi_rat(x0) == y);
        if (y > ExtendedRational(1, 1)) continue;
        const ExtendedRational x1 = MobiusMap::branch_inverse(1).apply(y);
        CHECK(x1 >= ExtendedRational(1, 1));
        CHECK(phi_rat(x1) == y);
    }
}

TEST_CASE("mobius composition and fixed points") {
    const MobiusMap m0 = MobiusMap::branch_inverse(0);
    const MobiusMap m1 = MobiusMap::branch_inverse(1);
    CHECK(m0.compose(MobiusMap::identity()) == m0);
    CHECK(std::abs(m0.compose(m1).determinant()) == 1);
    const auto fp = m0.fixed_points();
    REQUIRE(fp.size() == 1);
    CHECK(to_string(fp[0]) == "(-1+1√5)/2");
    const MobiusMap m100 = m1.compose(m0).compose(m0);
    const auto fp3 = m100.fixed_points();
    REQUIRE(fp3.size() == 1);
    CHECK(fp3[0] == ExtendedRational::infinity());
    CHECK_THROWS_AS(MobiusMap(BigInt(2), BigInt(0), BigInt(0), BigInt(1)), std::invalid_argument);
}

TEST_CASE("farey intervals") {
    const FareyInterval iv(ExtendedRational(1, 2), ExtendedRational(1, 1));
    CHECK(iv.is_unimodular());
    CHECK(iv.mediant() == ExtendedRational(2, 3));
    CHECK(iv.width() == q(1, 2));
    CHECK(iv.contains(make_point(ExtendedRational(2, 3))));
    CHECK_FALSE(iv.contains(make_point(ExtendedRational(1, 3))));
    CHECK_FALSE(FareyInterval(ExtendedRational(2, 1), ExtendedRational::infinity()).width().has_value());
    CHECK(FareyInterval::whole().str() == "0/1..1/0");
    CHECK_THROWS_AS(FareyInterval(ExtendedRational(1, 1), ExtendedRational(1, 2)), std::invalid_argument);
}

TEST_CASE("dyadics") {
    CHECK(DyadicRational(BigInt(6), 3).str() == "3/2^2");
    CHECK(DyadicRational(BigInt(0), 5).str() == "0/2^0");
    CHECK(DyadicRational::midpoint(DyadicRational(BigInt(0), 0), DyadicRational(BigInt(1), 0)).str() == "1/2^1");
    CHECK(DyadicRational(BigInt(1), 2) < DyadicRational(BigInt(1), 1));
}

TEST_CASE("distance sentinel ordering") {
    CHECK(Distance::finite(q(1, 2)) < Distance::infinite());
    CHECK_FALSE(Distance::infinite() < Distance::finite(q(1, 2)));
    CHECK(Distance::infinite().str() == "inf");
    CHECK(Distance::finite(q(3, 4)).str() == "3/4");
}

TEST_CASE("escape times") {
    CHECK(escape_time(ExtendedRational(0, 1)) == 0);
    CHECK(escape_time(ExtendedRational(1, 1)) == 1);
    CHECK(escape_time(ExtendedRational::infinity()) == 2);
    CHECK(escape_time(ExtendedRational(3, 5)) == 4);
    for (long p = 1; p <= 40; ++p) {
        for (long d = 1; d <= 40; ++d) {
            Rational x = q(p, d);
            std::uint64_t n = 0;
            while (x != 0) {
                x = oracle::phi(x);
                ++n;
            }
            CHECK(escape_time(ExtendedRational(p, d)) == n);
        }
    }
}

TEST_CASE("factorials guard overflow") {
    CHECK(factorial_u64(5) == 120);
    CHECK(factorial_u64(20) == 2432902008176640000ULL);
    CHECK_THROWS_AS(factorial_u64(21), std::overflow_error);
}

}  // TEST_SUITE
