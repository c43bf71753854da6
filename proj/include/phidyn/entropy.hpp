#pragma once

// Entropy estimators, mixing certificates, periodic witnesses and a finite
// transitivity scan.

#include "phidyn/coding.hpp"
#include "phidyn/numeric.hpp"

#include <string>
#include <vector>

namespace phidyn {

/// log((1 + sqrt 5) / 2)
inline constexpr long double kLogGolden = 0.48121182505960344749775891342436842L;
inline constexpr long double kGolden = 1.61803398874989484820458683436563812L;

struct EntropyEstimate {
    std::string method;  // polynomial-root | word-growth | spectral | lap-count
    long double value = 0;
    long double error_bound = -1;  // negative when unavailable
    std::uint64_t depth = 0;
    long double lambda = 0;  // growth constant whose log is `value`
};

BigInt count_admissible_words(unsigned n);
EntropyEstimate entropy_word_growth(unsigned n);
EntropyEstimate entropy_polynomial_root(long double tol);
EntropyEstimate transition_spectral_radius(unsigned iterations);

inline constexpr unsigned kMaxLapDepth = 28;
/// Monotone pieces of f^n; throws std::length_error past kMaxLapDepth.
BigInt lap_count(unsigned n);
EntropyEstimate entropy_lap_count(unsigned n);

/// Integer polynomial as coefficients, lowest degree first.
using IntPoly = std::vector<BigInt>;
IntPoly poly_multiply(const IntPoly& a, const IntPoly& b);
/// x^3 - 2x - 1 == (x + 1)(x^2 - x - 1), checked by exact expansion.
bool entropy_polynomial_factorization_holds();

struct MixingCertificate {
    Word word;
    std::vector<IntervalUnion> steps;  // steps[0] = cylinder(word), steps[n_cover] = [0, inf]
    std::size_t n_cover = 0;
};

/// Throws std::invalid_argument for inadmissible or degenerate cylinders.
MixingCertificate mixing_certificate(const Word& w);
/// Recomputes every image and checks the final cover.
bool certificate_consistent(const MixingCertificate& cert);

/// Point with purely periodic code (w 000)^inf; throws on inadmissible input.
Point dense_periodic_witness(const Word& w);

struct TransitivityReport {
    std::size_t word_len = 0;
    std::uint64_t stride = 0;
    std::uint64_t horizon = 0;
    std::vector<Word> found;
    std::vector<Word> missing;
    bool pass() const { return missing.empty(); }
};

/// Every admissible word of length word_len, in lexicographic order.
std::vector<Word> admissible_words(std::size_t len);

/// Looks for each admissible word u at an index i < horizon with i % stride == 0.
/// Throws std::invalid_argument when word_len > 8 or stride > 3.
TransitivityReport transitivity_check(const CodeStream& s, std::size_t word_len, std::uint64_t stride,
                                      std::uint64_t horizon);

}  // namespace phidyn
