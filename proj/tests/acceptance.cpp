// One line per acceptance criterion. Exit status is 0 when the set of failing
// criteria equals the set given with --expect-fail (empty by default).

#include "phidyn/coding.hpp"
#include "phidyn/conjugacy.hpp"
#include "phidyn/entropy.hpp"
#include "phidyn/numeric.hpp"
#include "phidyn/scrambled.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace phidyn;

namespace {

// Pinned tolerances, budgets and seeds.
constexpr long double kEntropyTol = 1e-6L;
constexpr long double kLapTol = 2e-2L;
constexpr long double kRootTol = 1e-12L;
constexpr unsigned kWordGrowthDepth = 40;
constexpr unsigned kSpectralIterations = 60;
constexpr unsigned kLapDepth = 20;
constexpr unsigned kMaxWordLen = 8;
constexpr unsigned kFareyMax = 12;
constexpr std::uint64_t kSeedTheorem1 = 2024;
constexpr std::uint64_t kSeedTheorem2 = 4048;
constexpr std::uint64_t kSeedSamples = 77;
constexpr std::size_t kPairs1 = 20;
constexpr std::size_t kPairs2 = 10;
constexpr unsigned kKLo = 5;
constexpr unsigned kKHi = 7;
constexpr std::size_t kPrefixBudget = 4096;
constexpr std::size_t kShallowBudget = 24;
constexpr double kDecidedRate = 0.90;
const Rational kEps(1, 100);
const Rational kFar1(3, 2);
const Rational kFar2(1000);

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> info;
};

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

FareyInterval iv(long a, long b, long c, long d) { return FareyInterval(ExtendedRational(a, b), ExtendedRational(c, d)); }

std::vector<Word> words_upto(unsigned max_len) {
    std::vector<Word> out;
    for (unsigned len = 1; len <= max_len; ++len) {
        for (auto& w : admissible_words(len)) out.push_back(std::move(w));
    }
    return out;
}

std::string fmt(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3Le", v);
    return buf;
}

Outcome c1() {
    Outcome o;
    const bool base = cylinder(Word::parse("0")) == iv(0, 1, 1, 1) && cylinder(Word::parse("1")) == iv(1, 1, 1, 0) &&
                      cylinder(Word::parse("00")) == iv(1, 2, 1, 1) && cylinder(Word::parse("01")) == iv(0, 1, 1, 2);
    const bool four = cylinder(Word::parse("000")) == iv(1, 2, 2, 3) &&
                      cylinder(Word::parse("001")) == iv(2, 3, 1, 1) &&
                      cylinder(Word::parse("0100")) == iv(0, 1, 1, 3) && cylinder(Word::parse("1000")) == iv(2, 1, 3, 1);
    const std::string u = to_string(normalize_union({cylinder(Word::parse("000")), cylinder(Word::parse("001")),
                                                     cylinder(Word::parse("0100")), cylinder(Word::parse("1000"))}));
    const bool uni = u == "0/1..1/3 U 1/2..1/1 U 2/1..3/1";
    o.pass = base && four && uni;
    o.detail = "union " + u;
    return o;
}

Outcome c2() {
    Outcome o;
    std::size_t points = 0;
    for (unsigned n = 0; n <= kFareyMax; ++n) {
        for (const auto& x : farey_level(n).entries) {
            ++points;
            if (!conjugacy_check(x)) {
                o.pass = false;
                o.detail = "conjugacy fails at " + x.str();
                return o;
            }
        }
    }
    for (unsigned n = 1; n <= kFareyMax; ++n) {
        const FareyReport r = farey_properties_report(n);
        for (const auto& id : r.identities) {
            if (!id.pass) {
                o.pass = false;
                o.detail = "identity (" + id.name + ") fails at n=" + std::to_string(n);
                return o;
            }
        }
    }
    o.detail = std::to_string(points) + " node checks, identities (a)-(d) for n<=12";
    return o;
}

Outcome c3() {
    Outcome o;
    const EntropyEstimate ests[] = {entropy_polynomial_root(kRootTol), entropy_word_growth(kWordGrowthDepth),
                                    transition_spectral_radius(kSpectralIterations), entropy_lap_count(kLapDepth)};
    std::ostringstream d;
    for (const auto& e : ests) {
        const long double err = std::fabs(e.value - kLogGolden);
        const long double tol = e.method == "lap-count" ? kLapTol : kEntropyTol;
        o.pass = o.pass && err < tol;
        d << e.method << " err " << fmt(err) << "; ";
    }
    long double prev = 1;
    bool monotone = true;
    for (unsigned n = 1; n <= kLapDepth; ++n) {
        const long double err = std::fabs(entropy_lap_count(n).value - kLogGolden);
        monotone = monotone && err < prev;
        prev = err;
    }
    const bool factor = entropy_polynomial_factorization_holds();
    o.pass = o.pass && monotone && factor;
    d << "lap monotone " << (monotone ? "yes" : "no") << "; factorization " << (factor ? "exact" : "wrong");
    o.detail = d.str();
    return o;
}

Outcome c4() {
    Outcome o;
    std::size_t n = 0;
    std::size_t worst = 0;
    for (const auto& w : words_upto(kMaxWordLen)) {
        const MixingCertificate c = mixing_certificate(w);
        ++n;
        worst = std::max(worst, c.n_cover > w.size() ? c.n_cover - w.size() : 0);
        if (c.n_cover > w.size() + 2 || !certificate_consistent(c)) {
            o.pass = false;
            o.detail = "word " + w.str() + " n_cover " + std::to_string(c.n_cover);
            return o;
        }
    }
    o.detail = std::to_string(n) + " words, max n_cover - |w| = " + std::to_string(worst);
    return o;
}

Outcome c5() {
    Outcome o;
    const bool a = to_string(periodic_point(Word(), Word::parse("0"))) == "(-1+1√5)/2";
    const bool b = to_string(periodic_point(Word::parse("1"), Word::parse("0"))) == "(3+1√5)/2";
    std::size_t n = 0;
    for (const auto& w : words_upto(kMaxWordLen)) {
        const Point x = dense_periodic_witness(w);
        Point y = x;
        for (std::size_t i = 0; i < w.size() + 3; ++i) y = phi(y);
        ++n;
        if (!cylinder(w).contains(x) || !(y == x)) {
            o.pass = false;
            o.detail = "witness fails for " + w.str();
            return o;
        }
    }
    o.pass = a && b;
    o.detail = "golden points exact; " + std::to_string(n) + " witnesses in cylinder and periodic";
    return o;
}

Outcome c6() {
    Outcome o;
    std::size_t events = 0, passed = 0;
    Rational min_far = -1;
    Rational max_close = 0;
    for (const auto& [eta, xi] : seeded_pairs(kSeedTheorem1, kPairs1, true)) {
        for (std::uint64_t i = 0; i <= 3; ++i) {
            const auto ev = theorem1_events(eta, xi, i, kKLo, kKHi, kEps, kFar1);
            const ScrambleReport r = verify_scrambling(mu_code(eta), mu_code(xi).shifted(i), ev, kPrefixBudget);
            events += r.results.size();
            passed += r.passed;
            for (const auto& e : r.results) {
                if (e.event.kind == EventKind::far && e.lower.value && (min_far < 0 || *e.lower.value < min_far)) {
                    min_far = *e.lower.value;
                }
                if (e.event.kind == EventKind::close && e.upper.value && *e.upper.value > max_close) {
                    max_close = *e.upper.value;
                }
            }
        }
    }
    const IntervalUnion bounded = normalize_union({cylinder(Word::parse("000")), cylinder(Word::parse("001")),
                                                   cylinder(Word::parse("0100")), cylinder(Word::parse("1000"))});
    std::mt19937_64 rng(kSeedSamples);
    std::size_t inside = 0;
    const auto pairs = seeded_pairs(kSeedTheorem1, kPairs1, true);
    for (int t = 0; t < 100; ++t) {
        const CodeStream mu = mu_code(pairs[static_cast<std::size_t>(t) % pairs.size()].first);
        const std::uint64_t n = rng() % 40321;
        const CodeEnclosure e = point_of_code(mu.shifted(n), 64, Rational(1, 1000));
        for (const auto& piece : bounded) {
            if (piece.contains(e.interval)) {
                ++inside;
                break;
            }
        }
    }
    o.pass = passed == events && inside == 100 && events > 0;
    std::ostringstream d;
    d << passed << "/" << events << " events pass; min far lower bound " << min_far.get_d()
      << ", max close upper bound " << max_close.get_d() << "; bounded " << inside << "/100";
    o.detail = d.str();
    return o;
}

struct Tally {
    std::size_t passed = 0, failed = 0, inconclusive = 0;
    std::map<std::string, std::size_t> failures;
    void add(const ScrambleReport& r) {
        passed += r.passed;
        failed += r.failed;
        inconclusive += r.inconclusive;
        for (const auto& e : r.results) {
            if (e.verdict != Verdict::fail) continue;
            std::string src = e.event.source.substr(0, e.event.source.find(" m="));
            ++failures[to_string(e.event.kind) + " " + src + " k=" + std::to_string(e.event.k)];
        }
    }
    std::size_t total() const { return passed + failed + inconclusive; }
    double decided() const { return total() ? double(passed + failed) / double(total()) : 1.0; }
    std::string str() const {
        std::ostringstream s;
        s << passed << " pass, " << failed << " fail, " << inconclusive << " inconclusive, decided "
          << std::to_string(decided() * 100).substr(0, 5) << "%";
        return s.str();
    }
};

Tally theorem2_run(std::size_t budget, unsigned k_lo, unsigned k_hi) {
    Tally t;
    const CodeStream alpha = alpha_transitive();
    const auto tracked = default_tracked_codes();
    for (const auto& [beta, eta] : seeded_pairs(kSeedTheorem2, kPairs2, false)) {
        const CodeStream tb = tau_code(beta, alpha, tracked);
        const CodeStream te = tau_code(eta, alpha, tracked);
        for (std::uint64_t i = 0; i <= 3; ++i) {
            t.add(verify_scrambling(tb, te.shifted(i), theorem2_events(tb, te, beta, eta, i, k_lo, k_hi, kEps, kFar2),
                                    budget));
            t.add(verify_scrambling(te, tb.shifted(i), theorem2_events(te, tb, eta, beta, i, k_lo, k_hi, kEps, kFar2),
                                    budget));
        }
    }
    return t;
}

Tally rational_run(std::size_t budget, unsigned k_lo, unsigned k_hi) {
    Tally t;
    const CodeStream alpha = alpha_transitive();
    const auto tracked = default_tracked_codes();
    for (const auto& pr : seeded_pairs(kSeedTheorem2, kPairs2, false)) {
        const CodeStream tb = tau_code(pr.first, alpha, tracked);
        for (const auto& r : {ExtendedRational(1, 1), ExtendedRational(0, 1), ExtendedRational(3, 5),
                              ExtendedRational(7, 3)}) {
            t.add(rational_vs_tau(r, tb, k_lo, k_hi, kEps, budget));
        }
    }
    return t;
}

Outcome c7() {
    Outcome o;
    Tally all = theorem2_run(kPrefixBudget, kKLo, kKHi);
    const Tally rat = rational_run(kPrefixBudget, kKLo, kKHi);
    all.passed += rat.passed;
    all.failed += rat.failed;
    all.inconclusive += rat.inconclusive;
    for (const auto& [k, v] : rat.failures) all.failures["rational " + k] += v;
    o.pass = all.decided() >= kDecidedRate && all.failed == 0;
    o.detail = "P=" + std::to_string(kPrefixBudget) + ": " + all.str();
    for (const auto& [k, v] : all.failures) o.info.push_back("fail " + k + ": " + std::to_string(v));
    const Tally shallow = theorem2_run(kShallowBudget, kKLo, kKHi);
    o.info.push_back("theorem2 at P=" + std::to_string(kShallowBudget) + " (far events through an inf-containing enclosure): " +
                     shallow.str());
    o.info.push_back("theorem2 at k=8, P=" + std::to_string(kPrefixBudget) + ": " + theorem2_run(kPrefixBudget, 8, 8).str());
    o.info.push_back("rational at k=6..8, P=" + std::to_string(kPrefixBudget) + ": " + rational_run(kPrefixBudget, 6, 8).str());
    return o;
}

Outcome c8() {
    Outcome o;
    const CodeStream a = alpha_transitive();
    std::size_t checks = 0;
    for (std::size_t len = 1; len <= 4; ++len) {
        for (std::uint64_t stride = 1; stride <= 3; ++stride) {
            const TransitivityReport r = transitivity_check(a, len, stride, 1000000);
            ++checks;
            if (!r.pass()) {
                o.pass = false;
                o.detail = "missing " + r.missing.front().str() + " at length " + std::to_string(len) + " stride " +
                           std::to_string(stride);
                return o;
            }
        }
    }
    o.detail = std::to_string(checks) + " (length, stride) scans complete within 10^6";
    return o;
}

Outcome c9() {
    Outcome o;
    const bool nodes = g_map(Rational(0)) == 1 && g_map(q(1, 6)) == q(1, 3) && g_map(q(1, 3)) == q(1, 6) &&
                       g_map(q(1, 2)) == 0 && g_map(Rational(1)) == q(1, 2);
    bool cycle = true;
    for (const Rational& x : {Rational(0), q(1, 2), Rational(1)}) cycle = cycle && g_map(g_map(g_map(x))) == x;
    std::mt19937_64 rng(kSeedSamples);
    std::size_t good = 0, drawn = 0;
    while (drawn < 50) {
        const long den = 24 + static_cast<long>(rng() % 9977);
        const long num = den / 6 + static_cast<long>(rng() % static_cast<unsigned long>(den / 6 + 2));
        const Rational x = q(num, den);
        if (x <= q(1, 6) || x >= q(1, 3) || x == q(1, 4)) continue;
        ++drawn;
        good += g_map(g_map(x)) == x ? 1 : 0;
    }
    const bool quarter = g_map(q(1, 4)) == q(1, 4);
    o.pass = nodes && cycle && quarter && good == 50;
    o.detail = std::string("nodes ") + (nodes ? "exact" : "wrong") + "; g^3 cycle " + (cycle ? "ok" : "broken") +
               "; g^2 = id on " + std::to_string(good) + "/50; g(1/4) = 1/4 " + (quarter ? "yes" : "no");
    return o;
}

Outcome c10() {
    Outcome o;
    std::size_t n = 0;
    std::uint64_t longest = 0;
    for (long p = 1; p <= 200; ++p) {
        for (long d = 1; d <= 200; ++d) {
            if (std::gcd(p, d) != 1) continue;
            const ExtendedRational x(p, d);
            const std::uint64_t e = escape_time(x);
            ExtendedRational y = x;
            for (std::uint64_t i = 0; i < e; ++i) y = phi_rat(y);
            ++n;
            longest = std::max(longest, e);
            if (!y.is_zero()) {
                o.pass = false;
                o.detail = "no escape for " + x.str();
                return o;
            }
        }
    }
    o.detail = std::to_string(n) + " rationals reach 0, longest escape " + std::to_string(longest);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc) {
            std::istringstream ids(argv[++i]);
            for (std::string id; std::getline(ids, id, ',');) expected.insert(std::stoi(id));
        }
    }
    const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria = {
        {1, "cylinder intervals", 1, c1},      {2, "conjugacy and Farey identities", 10, c2},
        {3, "entropy estimators", 5, c3},      {4, "mixing certificates", 30, c4},
        {5, "periodic points", 30, c5},        {6, "mu pair events", 120, c6},
        {7, "tau pair events", 300, c7},      {8, "transitivity of alpha", 60, c8},
        {9, "g counterexample", 1, c9},        {10, "escape times", 30, c10}};
    std::set<int> failed;
    for (const auto& [id, name, limit, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > limit) {
            o.pass = false;
            o.detail += "; over time limit";
        }
        if (!o.pass) failed.insert(id);
        std::printf("criterion %2d %s  %s: %s (%.2fs, limit %.0fs)\n", id, o.pass ? "PASS" : "FAIL", name,
                    o.detail.c_str(), secs, limit);
        for (const auto& line : o.info) std::printf("             %s\n", line.c_str());
    }
    const bool as_expected = failed == expected;
    std::printf("%zu/%zu criteria pass%s\n", criteria.size() - failed.size(), criteria.size(),
                expected.empty() ? "" : (as_expected ? "; failures match the expected set" : "; failures differ from the expected set"));
    return as_expected ? EXIT_SUCCESS : EXIT_FAILURE;
}
