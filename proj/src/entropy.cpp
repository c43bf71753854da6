#include "phidyn/entropy.hpp"

#include "phidyn/conjugacy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace phidyn {

namespace {

long double ratio_ld(const BigInt& a, const BigInt& b) {
    mpf_class q(a, 256);
    q /= mpf_class(b, 256);
    return static_cast<long double>(q.get_d());
}

// ratio_ld rounds through double; log adds a few more ulps.
constexpr long double kRounding = 4.0L * std::numeric_limits<double>::epsilon();

long double inverse_square(const BigInt& b) {
    const long double x = ratio_ld(b, BigInt(1));
    return 1.0L / (x * x);
}

}  // namespace

BigInt count_admissible_words(unsigned n) {
    if (n == 0) throw std::invalid_argument("count_admissible_words: n must be positive");
    BigInt end0 = 1;
    BigInt end1 = 1;
    for (unsigned i = 1; i < n; ++i) {
        BigInt next0 = end0 + end1;
        end1 = end0;
        end0 = std::move(next0);
    }
    return end0 + end1;
}

EntropyEstimate entropy_word_growth(unsigned n) {
    if (n < 2) throw std::invalid_argument("entropy_word_growth: n must be at least 2");
    const BigInt cur = count_admissible_words(n);
    const BigInt prev = count_admissible_words(n - 1);
    EntropyEstimate e;
    e.method = "word-growth";
    e.lambda = ratio_ld(cur, prev);
    e.value = std::log(e.lambda);
    // Consecutive Fibonacci ratios differ from the golden ratio by at most 1/prev^2.
    e.error_bound = inverse_square(prev) + kRounding;
    e.depth = n;
    return e;
}

EntropyEstimate entropy_polynomial_root(long double tol) {
    if (!(tol > 0)) throw std::invalid_argument("entropy_polynomial_root: tol must be positive");
    auto p = [](long double x) { return x * x * x - 2 * x - 1; };
    long double lo = 1;
    long double hi = 2;
    std::uint64_t steps = 0;
    while (hi - lo >= tol && steps < 200) {
        const long double mid = (lo + hi) / 2;
        if (p(mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++steps;
    }
    EntropyEstimate e;
    e.method = "polynomial-root";
    e.lambda = (lo + hi) / 2;
    e.value = std::log(e.lambda);
    e.error_bound = (hi - lo) / 2 / lo;
    e.depth = steps;
    return e;
}

EntropyEstimate transition_spectral_radius(unsigned iterations) {
    if (iterations == 0) throw std::invalid_argument("transition_spectral_radius: iterations must be positive");
    BigInt v0 = 1;
    BigInt v1 = 1;
    BigInt before;
    long double ratio = 0;
    for (unsigned i = 0; i < iterations; ++i) {
        before = v0 + v1;
        BigInt n0 = v0 + v1;
        v1 = v0;
        v0 = std::move(n0);
        ratio = ratio_ld(BigInt(v0 + v1), before);
    }
    EntropyEstimate e;
    e.method = "spectral";
    e.lambda = ratio;
    e.value = std::log(ratio);
    // L1 norms of A^i (1,1) are consecutive Fibonacci numbers.
    e.error_bound = inverse_square(before) + kRounding;
    e.depth = iterations;
    return e;
}

BigInt lap_count(unsigned n) {
    if (n == 0) throw std::invalid_argument("lap_count: n must be positive");
    if (n > kMaxLapDepth) throw std::length_error("lap_count: depth guard exceeded");
    // Linear pieces of f^k, stored as (value at left end, value at right end).
    struct Piece {
        Rational u, v;
    };
    const Rational half(1, 2);
    std::vector<Piece> pieces{{Rational(0), Rational(1)}};
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Piece> next;
        next.reserve(pieces.size() * 2);
        for (const auto& pc : pieces) {
            const bool crosses = (pc.u < half && half < pc.v) || (pc.v < half && half < pc.u);
            if (crosses) {
                next.push_back({f_map(pc.u), Rational(0)});
                next.push_back({Rational(0), f_map(pc.v)});
            } else {
                next.push_back({f_map(pc.u), f_map(pc.v)});
            }
        }
        pieces = std::move(next);
    }
    BigInt laps = 1;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const bool up_prev = pieces[i - 1].u < pieces[i - 1].v;
        const bool up_cur = pieces[i].u < pieces[i].v;
        if (up_prev != up_cur) laps += 1;
    }
    return laps;
}

EntropyEstimate entropy_lap_count(unsigned n) {
    EntropyEstimate e;
    e.method = "lap-count";
    const BigInt laps = lap_count(n);
    e.value = std::log(ratio_ld(laps, BigInt(1))) / n;
    e.lambda = std::exp(e.value);
    e.depth = n;
    return e;
}

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

bool entropy_polynomial_factorization_holds() {
    const IntPoly cubic{BigInt(-1), BigInt(-2), BigInt(0), BigInt(1)};
    const IntPoly linear{BigInt(1), BigInt(1)};
    const IntPoly quadratic{BigInt(-1), BigInt(-1), BigInt(1)};
    return poly_multiply(linear, quadratic) == cubic;
}

MixingCertificate mixing_certificate(const Word& w) {
    const FareyInterval start = cylinder(w);
    if (start.is_degenerate()) throw std::invalid_argument("mixing_certificate: degenerate cylinder");
    const IntervalUnion whole{FareyInterval::whole()};
    MixingCertificate cert;
    cert.word = w;
    cert.steps.push_back({start});
    const std::size_t guard = 4 * w.size() + 16;
    while (cert.steps.back() != whole) {
        if (cert.steps.size() > guard) throw std::logic_error("mixing_certificate: no cover within guard");
        cert.steps.push_back(phi_union_image(cert.steps.back()));
    }
    cert.n_cover = cert.steps.size() - 1;
    return cert;
}

bool certificate_consistent(const MixingCertificate& cert) {
    if (cert.steps.empty() || cert.steps.size() != cert.n_cover + 1) return false;
    if (cert.steps.front() != IntervalUnion{cylinder(cert.word)}) return false;
    const IntervalUnion whole{FareyInterval::whole()};
    for (std::size_t k = 0; k + 1 < cert.steps.size(); ++k) {
        if (cert.steps[k] == whole) return false;
        if (phi_union_image(cert.steps[k]) != cert.steps[k + 1]) return false;
    }
    return cert.steps.back() == whole;
}

Point dense_periodic_witness(const Word& w) {
    if (w.empty()) throw std::invalid_argument("dense_periodic_witness: empty word");
    if (!w.admissible()) throw std::invalid_argument("dense_periodic_witness: word contains the factor 11");
    return periodic_point(Word(), w.concat(Word::parse("000")));
}

std::vector<Word> admissible_words(std::size_t len) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Word> next;
        for (const auto& w : out) {
            Word zero = w;
            zero.push_back(0);
            next.push_back(std::move(zero));
            if (w.empty() || w[w.size() - 1] == 0) {
                Word one = w;
                one.push_back(1);
                next.push_back(std::move(one));
            }
        }
        out = std::move(next);
    }
    return out;
}

TransitivityReport transitivity_check(const CodeStream& s, std::size_t word_len, std::uint64_t stride,
                                      std::uint64_t horizon) {
    if (word_len == 0 || word_len > 8) throw std::invalid_argument("transitivity_check: word_len must be in 1..8");
    if (stride == 0 || stride > 3) throw std::invalid_argument("transitivity_check: stride must be in 1..3");
    std::vector<bool> seen(std::size_t{1} << word_len, false);
    const unsigned mask = (1u << word_len) - 1;
    unsigned window = 0;
    for (std::uint64_t i = 0; i + 1 < horizon + word_len; ++i) {
        window = ((window << 1) | static_cast<unsigned>(s.at(i))) & mask;
        if (i + 1 < word_len) continue;
        const std::uint64_t start = i + 1 - word_len;
        if (start % stride == 0) seen[window] = true;
    }
    TransitivityReport rep;
    rep.word_len = word_len;
    rep.stride = stride;
    rep.horizon = horizon;
    for (const auto& u : admissible_words(word_len)) {
        unsigned code = 0;
        for (std::size_t j = 0; j < u.size(); ++j) code = (code << 1) | static_cast<unsigned>(u[j]);
        (seen[code] ? rep.found : rep.missing).push_back(u);
    }
    return rep;
}

}  // namespace phidyn
