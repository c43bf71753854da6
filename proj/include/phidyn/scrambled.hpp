#pragma once

// Factorial-block code families mu_beta, alpha, tau_beta, their event
// schedules and finite-horizon verification of closeness/separation.

#include "phidyn/coding.hpp"
#include "phidyn/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phidyn {

/// (k+1)! must fit in 64 bits.
inline constexpr unsigned kMaxBlockK = 19;
inline constexpr std::uint64_t kPrefixZeros = 120;  // 5!

/// Index arithmetic of A(k!) = [k!, (k+1)!).
struct BlockLayout {
    unsigned k = 5;
    std::uint64_t start = 0;       // k!
    std::uint64_t string_len = 0;  // k!
    std::uint64_t zero_run = 0;    // k!/4
    std::uint64_t run_reps = 0;    // k!/12 repetitions of a 3-symbol pattern
    std::uint64_t beta_reps = 0;   // (k-1)!/3 repetitions of (b 0 0)
    std::uint64_t half = 0;        // (k-1)!/2, length of a C / C* sub-block

    /// Throws std::out_of_range unless 5 <= k <= kMaxBlockK.
    static BlockLayout make(unsigned k);
    std::uint64_t total() const { return k * string_len; }
    std::uint64_t string_start(unsigned s) const { return start + s * string_len; }
    /// Start of the (100), (001), (010) runs (id 0, 1, 2) in tau.
    std::uint64_t run_start(unsigned id) const { return string_start(1) + zero_run * (1 + id); }
    /// Start of (beta_m 0 0)^beta_reps in tau.
    std::uint64_t beta_start(unsigned m) const { return string_start(2) + m * 3 * beta_reps; }
    /// Named sub-block lengths of the tau layout, in order.
    std::vector<std::pair<std::string, std::uint64_t>> tau_parts() const;
};

/// k with k! <= n < (k+1)!, for n >= 120. Throws std::overflow_error past kMaxBlockK.
unsigned block_of(std::uint64_t n);

CodeStream mu_code(const CodeStream& beta);

/// Bits of mt19937_64(seed), least significant bit of each draw first.
CodeStream random_code(std::uint64_t seed);

/// `count` pairs drawn from consecutive seeds starting at `seed`; with
/// `distinct_first` a pair is redrawn until the two codes differ at index 0.
std::vector<std::pair<CodeStream, CodeStream>> seeded_pairs(std::uint64_t seed, std::size_t count,
                                                            bool distinct_first);

enum class AlphaSource {
    padded_blocks,  // block L: every admissible length-L word, zero-padded to a multiple of lcm(1..L)
    shortlex,       // one admissible word of length >= 5 per block, length-lexicographic
};

struct AlphaBlock {
    unsigned m = 0;
    std::uint64_t start = 0;  // m!
    std::uint64_t length = 0;
    std::string label;
};

/// Words of length >= 5 without "11", in length-lexicographic order.
std::vector<Word> enumerate_admissible(std::size_t count);

/// The blocks of alpha that start below 2^64. `m_schedule` empty means the
/// minimal schedule; otherwise it is validated against the separation rule
/// (std::invalid_argument on violation).
std::vector<AlphaBlock> alpha_blocks(AlphaSource source, const std::vector<unsigned>& m_schedule = {});
CodeStream alpha_transitive(AlphaSource source = AlphaSource::padded_blocks,
                            const std::vector<unsigned>& m_schedule = {});

/// C(x, i : j); requires j > i >= 5 and (j - i + 1) % 3 == 0.
Word c_block(const CodeStream& code, std::uint64_t i, std::uint64_t j);
/// C*(x, i : j), same preconditions.
Word c_star_block(const CodeStream& code, std::uint64_t i, std::uint64_t j);

/// Default tracked codes: (0), 1(0), (10).
std::vector<CodeStream> default_tracked_codes();

/// x(i) = tracked[(i - 1) mod tracked.size()].
CodeStream tau_code(const CodeStream& beta, const CodeStream& alpha, const std::vector<CodeStream>& tracked);

enum class EventKind { close, far };

struct ScheduleEvent {
    EventKind kind = EventKind::close;
    std::uint64_t index = 0;
    std::string source;
    Rational threshold;
    unsigned k = 0;
};

std::string to_string(EventKind kind);

/// Events for the pair (mu_eta, shift(mu_xi, shift)).
std::vector<ScheduleEvent> theorem1_events(const CodeStream& eta, const CodeStream& xi, std::uint64_t shift,
                                           unsigned k_lo, unsigned k_hi, const Rational& eps, const Rational& m_big);
/// Events for the pair (tau_beta, shift(tau_eta, shift)); tau_beta and tau_eta are
/// read to keep only separations the layout actually forces.
std::vector<ScheduleEvent> theorem2_events(const CodeStream& tau_beta, const CodeStream& tau_eta,
                                           const CodeStream& beta, const CodeStream& eta, std::uint64_t shift,
                                           unsigned k_lo, unsigned k_hi, const Rational& eps, const Rational& m_big);
/// Events for the pair (x(i), shift(tau, j - 1)) from the C and C* windows, k > j.
std::vector<ScheduleEvent> tracking_events(const CodeStream& tracked_code, unsigned i, unsigned j, unsigned k_lo,
                                           unsigned k_hi, const Rational& eps, const Rational& m_big);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct EventResult {
    ScheduleEvent event;
    Verdict verdict = Verdict::inconclusive;
    std::string route;  // "margin", "infinite-enclosure", or "" when undecided
    Distance lower;
    Distance upper;
    std::size_t prefix_used = 0;
    FareyInterval enclosure_s;
    FareyInterval enclosure_t;
};

struct ScrambleReport {
    std::string pair;
    std::vector<EventResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t inconclusive = 0;
    Distance max_lower;  // finite limsup proxy
    Distance min_upper;  // finite liminf proxy

    bool all_pass() const { return failed == 0 && inconclusive == 0; }
    double decided_rate() const;
};

/// Certified bounds on the distance between points of two enclosures.
/// Distances involving inf are infinite; two copies of {inf} are at distance 0.
std::pair<Distance, Distance> distance_bounds(const FareyInterval& a, const FareyInterval& b);

/// Judges one event from enclosures; nullopt while undecided. `final_step`
/// enables the unbounded-enclosure rule for far events.
std::optional<std::pair<Verdict, std::string>> judge(EventKind kind, const Rational& threshold,
                                                     const FareyInterval& a, const FareyInterval& b,
                                                     bool final_step);

/// Refines cylinders of shift(s, n) and shift(t, n) together, up to prefix_len symbols each.
ScrambleReport verify_scrambling(const CodeStream& s, const CodeStream& t, const std::vector<ScheduleEvent>& events,
                                 std::size_t prefix_len, std::string pair_label = "");

/// Phase-alignment events between the rational orbit of r and tau.
ScrambleReport rational_vs_tau(const ExtendedRational& r, const CodeStream& tau, unsigned k_lo, unsigned k_hi,
                               const Rational& eps, std::size_t prefix_len);

/// Piecewise-linear map through (0,1), (1/6,1/3), (1/3,1/6), (1/2,0), (1,1/2).
Rational g_map(const Rational& x);

}  // namespace phidyn
