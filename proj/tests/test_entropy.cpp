#include "oracles.hpp"
#include "phidyn/conjugacy.hpp"
#include "phidyn/entropy.hpp"
#include "phidyn/scrambled.hpp"

#include <doctest.h>

#include <cmath>

using namespace phidyn;
using oracle::q;

namespace {

// Laps of f^n from its values on the grid i/2^n, which contains every breakpoint.
std::size_t grid_laps(unsigned n) {
    const unsigned long cells = 1UL << n;
    std::vector<Rational> y;
    for (unsigned long i = 0; i <= cells; ++i) {
        Rational x{BigInt(i), BigInt(cells)};
        x.canonicalize();
        for (unsigned k = 0; k < n; ++k) x = f_map(x);
        y.push_back(x);
    }
    std::size_t laps = 1;
    int dir = 0;
    for (std::size_t i = 1; i < y.size(); ++i) {
        const int d = y[i] > y[i - 1] ? 1 : -1;
        if (dir != 0 && d != dir) ++laps;
        dir = d;
    }
    return laps;
}

bool union_contains(const IntervalUnion& u, const ExtendedRational& x) {
    for (const auto& piece : u) {
        if (piece.contains(make_point(x))) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("admissible word counts match brute force") {
    for (unsigned n = 1; n <= 16; ++n) {
        CHECK(count_admissible_words(n) == oracle::brute_admissible(n).size());
    }
}

TEST_CASE("admissible words in lexicographic order") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto words = admissible_words(n);
        const auto brute = oracle::brute_admissible(n);
        REQUIRE(words.size() == brute.size());
        for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i].str() == brute[i]);
    }
}

TEST_CASE("word growth estimate") {
    const EntropyEstimate e3 = entropy_word_growth(3);
    CHECK(std::fabs(static_cast<double>(e3.value) - std::log(5.0 / 3.0)) < 1e-15);
    const EntropyEstimate e40 = entropy_word_growth(40);
    CHECK(std::fabs(e40.value - kLogGolden) < 1e-6L);
    CHECK(std::fabs(e40.value - kLogGolden) <= e40.error_bound);
}

TEST_CASE("polynomial root") {
    const EntropyEstimate e = entropy_polynomial_root(1e-12L);
    CHECK(std::fabs(e.lambda - kGolden) < 1e-12L);
    CHECK(std::fabs(e.value - kLogGolden) < 1e-6L);
    CHECK(std::fabs(e.value - kLogGolden) <= e.error_bound + 1e-15L);
}

TEST_CASE("spectral radius") {
    const EntropyEstimate e = transition_spectral_radius(60);
    CHECK(std::fabs(e.value - kLogGolden) < 1e-6L);
    CHECK(std::fabs(e.value - kLogGolden) <= e.error_bound);
    CHECK(e.error_bound > 0);
}

TEST_CASE("lap counts are Fibonacci") {
    BigInt a = 1, b = 2;  // F(2), F(3)
    for (unsigned n = 1; n <= 20; ++n) {
        CHECK(lap_count(n) == b);
        const BigInt c = a + b;
        a = b;
        b = c;
    }
    for (unsigned n = 1; n <= 11; ++n) CHECK(lap_count(n) == grid_laps(n));
    CHECK_THROWS_AS(lap_count(kMaxLapDepth + 1), std::length_error);
}

TEST_CASE("lap-count entropy improves monotonically") {
    long double prev = 1;
    for (unsigned n = 1; n <= 20; ++n) {
        const long double err = std::fabs(entropy_lap_count(n).value - kLogGolden);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 2e-2L);
}

TEST_CASE("polynomial factorization") {
    CHECK(entropy_polynomial_factorization_holds());
    const IntPoly p = poly_multiply({BigInt(1), BigInt(1)}, {BigInt(-1), BigInt(-1), BigInt(1)});
    CHECK(p == IntPoly{BigInt(-1), BigInt(-2), BigInt(0), BigInt(1)});
}

TEST_CASE("mixing certificate for 00") {
    const MixingCertificate c = mixing_certificate(Word::parse("00"));
    CHECK(c.n_cover == 2);
    REQUIRE(c.steps.size() == 3);
    CHECK(to_string(c.steps[0]) == "1/2..1/1");
    CHECK(to_string(c.steps[1]) == "0/1..1/1");
    CHECK(to_string(c.steps[2]) == "0/1..1/0");
    CHECK(certificate_consistent(c));
    CHECK_THROWS_AS(mixing_certificate(Word::parse("11")), std::invalid_argument);
}

TEST_CASE("mixing certificates map sampled points forward") {
    oracle::Gen g(41);
    for (unsigned len = 1; len <= 6; ++len) {
        for (const auto& text : oracle::brute_admissible(len)) {
            const MixingCertificate c = mixing_certificate(Word::parse(text));
            CHECK(c.n_cover <= len + 2);
            CHECK(to_string(c.steps.back()) == "0/1..1/0");
            for (std::size_t s = 0; s + 1 < c.steps.size(); ++s) {
                for (const auto& piece : c.steps[s]) {
                    if (piece.hi().is_infinite() || piece.is_degenerate()) continue;
                    const Rational x = g.between(piece.lo().to_rational(), piece.hi().to_rational());
                    CHECK(union_contains(c.steps[s + 1], phi_rat(ExtendedRational::from_rational(x))));
                }
            }
        }
    }
}

TEST_CASE("dense periodic witnesses") {
    const Point x = dense_periodic_witness(Word::parse("0100"));
    CHECK(to_string(x) == "(-9+1√165)/14");
    for (unsigned len = 1; len <= 6; ++len) {
        for (const auto& text : oracle::brute_admissible(len)) {
            const Word w = Word::parse(text);
            const Point p = dense_periodic_witness(w);
            CHECK(cylinder(w).contains(p));
            CHECK(itinerary(p, 2 * (len + 3)).str() == (text + "000") + (text + "000"));
            Point y = p;
            for (unsigned i = 0; i < len + 3; ++i) y = phi(y);
            CHECK(y == p);
        }
    }
}

TEST_CASE("transitivity scan") {
    const CodeStream a = alpha_transitive();
    for (std::size_t len = 1; len <= 3; ++len) {
        for (std::uint64_t stride = 1; stride <= 3; ++stride) CHECK(transitivity_check(a, len, stride, 100000).pass());
    }
    const CodeStream z = CodeStream::periodic(Word(), Word::parse("0"));
    const TransitivityReport r = transitivity_check(z, 2, 1, 1000);
    CHECK_FALSE(r.pass());
    CHECK(r.missing.size() == 2);
    CHECK_THROWS_AS(transitivity_check(a, 9, 1, 10), std::invalid_argument);
}

}  // TEST_SUITE
