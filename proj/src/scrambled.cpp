#include "phidyn/scrambled.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>

namespace phidyn {

namespace {

void check_k_range(unsigned k_lo, unsigned k_hi) {
    if (k_lo < 5 || k_hi > kMaxBlockK || k_lo > k_hi)
        throw std::out_of_range("k range must satisfy 5 <= lo <= hi <= " + std::to_string(kMaxBlockK));
}

// Admissible words of each length r (r = 0 gives the empty word).
std::uint64_t count_words(unsigned r) {
    std::uint64_t a = 1;  // r = 0
    std::uint64_t b = 2;  // r = 1
    if (r == 0) return a;
    for (unsigned i = 1; i < r; ++i) {
        const std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

// Symbol p of the rank-th admissible word of length len in lexicographic order.
int unrank_symbol(unsigned len, std::uint64_t rank, unsigned p) {
    int prev = 0;
    for (unsigned pos = 0; pos <= p; ++pos) {
        int s = 0;
        if (prev != 1) {
            const std::uint64_t with_zero = count_words(len - pos - 1);
            if (rank >= with_zero) {
                rank -= with_zero;
                s = 1;
            }
        }
        if (pos == p) return s;
        prev = s;
    }
    return 0;
}

std::uint64_t lcm_upto(unsigned n) {
    std::uint64_t l = 1;
    for (unsigned i = 2; i <= n; ++i) l = std::lcm(l, static_cast<std::uint64_t>(i));
    return l;
}

std::uint64_t padded_len(unsigned len) {
    const std::uint64_t l = lcm_upto(len);
    return ((len + 1 + l - 1) / l) * l;
}

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kU64Max - b ? kU64Max : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kU64Max / a) return kU64Max;
    return a * b;
}

struct AlphaData {
    AlphaSource source;
    std::vector<AlphaBlock> blocks;
    std::vector<unsigned> word_len;         // padded: L of block i
    std::vector<std::uint64_t> pad;         // padded: P_L of block i
    std::vector<Word> words;                // shortlex: B_i
};

}  // namespace

// ---------------------------------------------------------------- layout

BlockLayout BlockLayout::make(unsigned k) {
    if (k < 5 || k > kMaxBlockK) throw std::out_of_range("BlockLayout: k must be in 5.." + std::to_string(kMaxBlockK));
    BlockLayout b;
    b.k = k;
    b.start = factorial_u64(k);
    b.string_len = b.start;
    b.zero_run = b.start / 4;
    b.run_reps = b.start / 12;
    b.beta_reps = factorial_u64(k - 1) / 3;
    b.half = factorial_u64(k - 1) / 2;
    return b;
}

std::vector<std::pair<std::string, std::uint64_t>> BlockLayout::tau_parts() const {
    std::vector<std::pair<std::string, std::uint64_t>> parts;
    parts.emplace_back("alpha", string_len);
    parts.emplace_back("zeros", zero_run);
    parts.emplace_back("run100", 3 * run_reps);
    parts.emplace_back("run001", 3 * run_reps);
    parts.emplace_back("run010", 3 * run_reps);
    for (unsigned m = 0; m < k; ++m) parts.emplace_back("beta" + std::to_string(m), 3 * beta_reps);
    for (unsigned i = 1; i + 3 <= k; ++i) {
        for (unsigned j = 1; j <= k; ++j) parts.emplace_back("C" + std::to_string(i) + "." + std::to_string(j), half);
        for (unsigned j = 1; j <= k; ++j) parts.emplace_back("C*" + std::to_string(i) + "." + std::to_string(j), half);
    }
    return parts;
}

unsigned block_of(std::uint64_t n) {
    if (n < kPrefixZeros) throw std::out_of_range("block_of: index lies in the 0^120 prefix");
    unsigned k = 5;
    while (true) {
        if (k >= kMaxBlockK) {
            if (n >= factorial_u64(kMaxBlockK + 1)) throw std::overflow_error("block_of: index beyond the max-k guard");
            return kMaxBlockK;
        }
        if (n < factorial_u64(k + 1)) return k;
        ++k;
    }
}

// ---------------------------------------------------------------- mu

CodeStream mu_code(const CodeStream& beta) {
    return CodeStream::procedural("mu[" + beta.str() + "]", [beta](std::uint64_t n) -> int {
        if (n < kPrefixZeros) return 0;
        const unsigned k = block_of(n);
        const std::uint64_t f = factorial_u64(k);
        const std::uint64_t s = (n - f) / f;
        const std::uint64_t t = (n - f) % f;
        if (t != 1) return 0;
        return s == 0 ? 1 : beta.at(s - 1);
    });
}

namespace {

struct BitCache {
    std::mt19937_64 engine;
    std::vector<std::uint64_t> draws;
};

}  // namespace

CodeStream random_code(std::uint64_t seed) {
    auto cache = std::make_shared<BitCache>();
    cache->engine.seed(seed);
    return CodeStream::procedural("random[" + std::to_string(seed) + "]", [cache](std::uint64_t n) -> int {
        const std::uint64_t word = n / 64;
        if (word > (std::uint64_t{1} << 24)) throw std::out_of_range("random_code: index beyond the cached range");
        while (cache->draws.size() <= word) cache->draws.push_back(cache->engine());
        return static_cast<int>((cache->draws[word] >> (n % 64)) & 1U);
    });
}

std::vector<std::pair<CodeStream, CodeStream>> seeded_pairs(std::uint64_t seed, std::size_t count,
                                                            bool distinct_first) {
    std::vector<std::pair<CodeStream, CodeStream>> out;
    std::uint64_t next = seed;
    while (out.size() < count) {
        CodeStream a = random_code(next++);
        CodeStream b = random_code(next++);
        if (distinct_first && a.at(0) == b.at(0)) continue;
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------- alpha

std::vector<Word> enumerate_admissible(std::size_t count) {
    std::vector<Word> out;
    for (std::size_t len = 5; out.size() < count; ++len) {
        std::vector<Word> level{Word()};
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Word> next;
            for (const auto& w : level) {
                Word z = w;
                z.push_back(0);
                next.push_back(std::move(z));
                if (w.empty() || w[w.size() - 1] == 0) {
                    Word o = w;
                    o.push_back(1);
                    next.push_back(std::move(o));
                }
            }
            level = std::move(next);
        }
        for (auto& w : level) {
            if (out.size() == count) break;
            out.push_back(std::move(w));
        }
    }
    return out;
}

namespace {

AlphaData build_alpha(AlphaSource source, const std::vector<unsigned>& m_schedule) {
    AlphaData data;
    data.source = source;
    const std::vector<Word> shortlex = source == AlphaSource::shortlex ? enumerate_admissible(24) : std::vector<Word>{};
    std::uint64_t prev_end = 0;  // (m_{i-1})! + k_{i-1}
    unsigned prev_m = 0;
    for (std::size_t i = 0;; ++i) {
        // Length of block i.
        std::uint64_t len = 0;
        std::string label;
        unsigned wl = 0;
        std::uint64_t pad = 0;
        if (source == AlphaSource::padded_blocks) {
            wl = static_cast<unsigned>(i + 1);
            pad = padded_len(wl);
            len = sat_mul(count_words(wl), pad);
            label = "all length-" + std::to_string(wl) + " words, stride " + std::to_string(pad);
        } else {
            if (i >= shortlex.size()) break;
            len = shortlex[i].size();
            label = shortlex[i].str();
        }
        unsigned m = 0;
        if (!m_schedule.empty()) {
            if (i >= m_schedule.size()) break;
            m = m_schedule[i];
            if (m > 20) break;
            if (i > 0 && m <= prev_m) throw std::invalid_argument("alpha schedule must be strictly increasing");
            if (i > 0 && !(factorial_u64(m) > sat_add(prev_end, 1)))
                throw std::invalid_argument("alpha schedule violates (m_i)! > (m_{i-1})! + k_{i-1} + 1 at i = " +
                                            std::to_string(i + 1));
        } else {
            m = i == 0 ? 1 : prev_m + 1;
            while (i > 0 && m <= 20 && !(factorial_u64(m) > sat_add(prev_end, 1))) ++m;
            if (m > 20) break;
        }
        if (m == 0) throw std::invalid_argument("alpha schedule entries must be positive");
        AlphaBlock b;
        b.m = m;
        b.start = factorial_u64(m);
        b.length = len;
        b.label = label;
        data.blocks.push_back(b);
        data.word_len.push_back(wl);
        data.pad.push_back(pad);
        if (source == AlphaSource::shortlex) data.words.push_back(shortlex[i]);
        prev_end = sat_add(b.start, len);
        prev_m = m;
        if (m == 20) break;
    }
    return data;
}

}  // namespace

std::vector<AlphaBlock> alpha_blocks(AlphaSource source, const std::vector<unsigned>& m_schedule) {
    return build_alpha(source, m_schedule).blocks;
}

CodeStream alpha_transitive(AlphaSource source, const std::vector<unsigned>& m_schedule) {
    auto data = std::make_shared<const AlphaData>(build_alpha(source, m_schedule));
    const std::string name = source == AlphaSource::padded_blocks ? "alpha" : "alpha-shortlex";
    return CodeStream::procedural(name, [data](std::uint64_t n) -> int {
        for (std::size_t i = 0; i < data->blocks.size(); ++i) {
            const AlphaBlock& b = data->blocks[i];
            if (n < b.start) return 0;
            if (n - b.start >= b.length) continue;
            const std::uint64_t o = n - b.start;
            if (data->source == AlphaSource::shortlex) return data->words[i][static_cast<std::size_t>(o)];
            const std::uint64_t p = o % data->pad[i];
            if (p >= data->word_len[i]) return 0;
            return unrank_symbol(data->word_len[i], o / data->pad[i], static_cast<unsigned>(p));
        }
        return 0;
    });
}

// ---------------------------------------------------------------- C blocks

namespace {
void check_window(std::uint64_t i, std::uint64_t j) {
    if (!(j > i && i >= 5)) throw std::invalid_argument("C block: requires j > i >= 5");
    if ((j - i + 1) % 3 != 0) throw std::invalid_argument("C block: j - i + 1 must be a multiple of 3");
}
}  // namespace

Word c_block(const CodeStream& code, std::uint64_t i, std::uint64_t j) {
    check_window(i, j);
    Word w;
    for (std::uint64_t n = i; n < j; ++n) w.push_back(code.at(n));
    w.push_back(0);
    return w;
}

Word c_star_block(const CodeStream& code, std::uint64_t i, std::uint64_t j) {
    check_window(i, j);
    const std::uint64_t len = j - i + 1;
    const Word unit = Word::parse("100");
    if (code.at(i) == 1) return Word::parse("0").concat(unit.repeat((len - 3) / 3)).concat(Word::parse("10"));
    return unit.repeat(len / 3);
}

// ---------------------------------------------------------------- tau

std::vector<CodeStream> default_tracked_codes() {
    return {CodeStream::periodic(Word(), Word::parse("0")), CodeStream::periodic(Word::parse("1"), Word::parse("0")),
            CodeStream::periodic(Word(), Word::parse("10"))};
}

CodeStream tau_code(const CodeStream& beta, const CodeStream& alpha, const std::vector<CodeStream>& tracked) {
    if (tracked.empty()) throw std::invalid_argument("tau_code: at least one tracked code is required");
    std::string name = "tau[" + beta.str() + ";" + alpha.str() + ";";
    for (std::size_t i = 0; i < tracked.size(); ++i) name += (i ? "," : "") + tracked[i].str();
    name += "]";
    return CodeStream::procedural(name, [beta, alpha, tracked](std::uint64_t n) -> int {
        if (n < kPrefixZeros) return n + 1 < kPrefixZeros ? alpha.at(n) : 0;
        const BlockLayout L = BlockLayout::make(block_of(n));
        const std::uint64_t f = L.string_len;
        const std::uint64_t s = (n - f) / f;
        const std::uint64_t t = (n - f) % f;
        if (s == 0) return alpha.at(t);
        if (s == 1) {
            if (t < L.zero_run) return 0;
            const std::uint64_t u = t - L.zero_run;
            static const char* const patterns[3] = {"100", "001", "010"};
            return patterns[u / L.zero_run][u % 3] - '0';
        }
        if (s == 2) {
            const std::uint64_t group = 3 * L.beta_reps;
            if (t % 3 != 0) return 0;
            return beta.at(t / group);
        }
        const std::uint64_t i = s - 2;  // 1 .. k-3
        const CodeStream& gamma = tracked[static_cast<std::size_t>((i - 1) % tracked.size())];
        const std::uint64_t base = (3 + i) * f;
        const std::uint64_t sub = t / L.half;
        const std::uint64_t v = t % L.half;
        if (sub < L.k) {
            if (v + 1 == L.half) return 0;
            return gamma.at(base + sub * (L.half - 1) + v);
        }
        const std::uint64_t src = base + f / 2 + (sub - L.k) * (L.half - 1);
        if (gamma.at(src) == 1) {
            if (v == 0 || v + 1 == L.half) return 0;
            if (v + 2 == L.half) return 1;
            return (v - 1) % 3 == 0 ? 1 : 0;
        }
        return v % 3 == 0 ? 1 : 0;
    });
}

// ---------------------------------------------------------------- schedules

std::string to_string(EventKind kind) { return kind == EventKind::close ? "close" : "far"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

std::vector<ScheduleEvent> theorem1_events(const CodeStream& eta, const CodeStream& xi, std::uint64_t shift,
                                           unsigned k_lo, unsigned k_hi, const Rational& eps, const Rational& m_big) {
    check_k_range(k_lo, k_hi);
    std::vector<ScheduleEvent> out;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        const std::uint64_t f = factorial_u64(k);
        if (shift + 3 >= f) throw std::out_of_range("theorem1_events: shift too large for k");
        if (shift >= 1) out.push_back({EventKind::far, f + 1, "k!+1", m_big, k});
        out.push_back({EventKind::close, f + 2, "k!+2", eps, k});
        for (unsigned m = 0; m + 2 <= k; ++m) {
            const std::uint64_t idx = (m + 2) * f + 1;
            const std::string tag = "(" + std::to_string(m) + "+2)k!+1";
            if (shift == 0) {
                if (eta.at(m) != xi.at(m)) out.push_back({EventKind::far, idx, tag, m_big, k});
            } else {
                if (eta.at(m) == 1) out.push_back({EventKind::far, idx, tag, m_big, k});
                if (xi.at(m) == 1) out.push_back({EventKind::far, idx - shift, tag + "-i", m_big, k});
            }
        }
    }
    return out;
}

std::vector<ScheduleEvent> theorem2_events(const CodeStream& tau_beta, const CodeStream& tau_eta,
                                           const CodeStream& beta, const CodeStream& eta, std::uint64_t shift,
                                           unsigned k_lo, unsigned k_hi, const Rational& eps, const Rational& m_big) {
    check_k_range(k_lo, k_hi);
    std::vector<ScheduleEvent> out;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        const BlockLayout L = BlockLayout::make(k);
        if (2 * shift >= L.zero_run) throw std::out_of_range("theorem2_events: shift too large for k");
        out.push_back({EventKind::close, L.string_start(1) + L.zero_run / 2, "zero-run", eps, k});
        if (shift >= 1) out.push_back({EventKind::far, L.run_start(0) - shift, "shift-separation", m_big, k});
        if (shift % 3 != 0) out.push_back({EventKind::far, L.run_start(0), "infinity-approach", m_big, k});
        for (unsigned m = 0; m < k; ++m) {
            const std::uint64_t q = L.beta_start(m);
            const std::string tag = "beta-separation m=" + std::to_string(m);
            bool at_q = false;
            if (beta.at(m) == 1 && tau_eta.at(q + shift) == 0) {
                out.push_back({EventKind::far, q, tag, m_big, k});
                at_q = true;
            }
            if (eta.at(m) == 1 && tau_beta.at(q - shift) == 0 && !(shift == 0 && at_q)) {
                out.push_back({EventKind::far, q - shift, tag, m_big, k});
            }
        }
    }
    return out;
}

std::vector<ScheduleEvent> tracking_events(const CodeStream& tracked_code, unsigned i, unsigned j, unsigned k_lo,
                                           unsigned k_hi, const Rational& eps, const Rational& m_big) {
    check_k_range(k_lo, k_hi);
    if (i == 0 || j == 0) throw std::invalid_argument("tracking_events: i and j start at 1");
    std::vector<ScheduleEvent> out;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        if (k <= j || i + 3 > k) continue;
        const BlockLayout L = BlockLayout::make(k);
        const std::uint64_t base = (3 + i) * L.string_len;
        const std::string tag = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        out.push_back({EventKind::close, base + (j - 1) * (L.half - 1), "C-window " + tag, eps, k});
        const std::uint64_t src = base + L.string_len / 2 + (j - 1) * (L.half - 1);
        out.push_back(
            {EventKind::far, src + static_cast<std::uint64_t>(tracked_code.at(src)), "C*-window " + tag, m_big, k});
    }
    return out;
}

// ---------------------------------------------------------------- verification

double ScrambleReport::decided_rate() const {
    const std::size_t total = passed + failed + inconclusive;
    return total == 0 ? 1.0 : static_cast<double>(passed + failed) / static_cast<double>(total);
}

std::pair<Distance, Distance> distance_bounds(const FareyInterval& a, const FareyInterval& b) {
    const bool a_inf = a.lo().is_infinite();
    const bool b_inf = b.lo().is_infinite();
    if (a_inf && b_inf) return {Distance::finite(0), Distance::finite(0)};
    if (a_inf || b_inf) {
        const FareyInterval& other = a_inf ? b : a;
        return {other.hi().is_infinite() ? Distance::finite(0) : Distance::infinite(), Distance::infinite()};
    }
    Distance lower = Distance::finite(0);
    if (a.hi() < b.lo()) {
        lower = Distance::finite(b.lo().to_rational() - a.hi().to_rational());
    } else if (b.hi() < a.lo()) {
        lower = Distance::finite(a.lo().to_rational() - b.hi().to_rational());
    }
    if (a.hi().is_infinite() || b.hi().is_infinite()) return {lower, Distance::infinite()};
    const Rational u1 = a.hi().to_rational() - b.lo().to_rational();
    const Rational u2 = b.hi().to_rational() - a.lo().to_rational();
    return {lower, Distance::finite(u1 > u2 ? u1 : u2)};
}

std::optional<std::pair<Verdict, std::string>> judge(EventKind kind, const Rational& threshold,
                                                     const FareyInterval& a, const FareyInterval& b,
                                                     bool final_step) {
    const auto [lower, upper] = distance_bounds(a, b);
    if (kind == EventKind::close) {
        if (!upper.is_infinite() && *upper.value < threshold) return std::pair{Verdict::pass, std::string("margin")};
        if (lower.is_infinite() || *lower.value >= threshold) return std::pair{Verdict::fail, std::string("margin")};
        return std::nullopt;
    }
    if (lower.is_infinite() || *lower.value > threshold) return std::pair{Verdict::pass, std::string("margin")};
    if (!upper.is_infinite() && *upper.value <= threshold) return std::pair{Verdict::fail, std::string("margin")};
    if (final_step && a.hi().is_infinite() != b.hi().is_infinite() && *lower.value > 0)
        return std::pair{Verdict::pass, std::string("infinite-enclosure")};
    return std::nullopt;
}

namespace {

void tally(ScrambleReport& rep, EventResult r) {
    switch (r.verdict) {
        case Verdict::pass: ++rep.passed; break;
        case Verdict::fail: ++rep.failed; break;
        default: ++rep.inconclusive; break;
    }
    if (rep.results.empty() || rep.max_lower < r.lower) rep.max_lower = r.lower;
    if (rep.results.empty() || r.upper < rep.min_upper) rep.min_upper = r.upper;
    rep.results.push_back(std::move(r));
}

EventResult run_event(const ScheduleEvent& ev, const CodeStream& s, const CodeStream* t,
                      const std::optional<FareyInterval>& fixed_t, std::size_t prefix_len) {
    if (prefix_len == 0) throw std::invalid_argument("verify: prefix_len must be positive");
    const CodeStream sa = s.shifted(ev.index);
    std::optional<CodeStream> tb;
    if (t) tb = t->shifted(ev.index);
    CylinderRefiner ra;
    CylinderRefiner rb;
    EventResult res;
    res.event = ev;
    for (std::size_t len = 1; len <= prefix_len; ++len) {
        ra.push(sa.at(len - 1));
        if (tb) rb.push(tb->at(len - 1));
        const FareyInterval& ib = tb ? rb.interval() : *fixed_t;
        const bool last = len == prefix_len;
        const auto verdict = judge(ev.kind, ev.threshold, ra.interval(), ib, last);
        if (verdict || last) {
            auto [lo, up] = distance_bounds(ra.interval(), ib);
            res.lower = std::move(lo);
            res.upper = std::move(up);
            res.prefix_used = len;
            res.enclosure_s = ra.interval();
            res.enclosure_t = ib;
            if (verdict) {
                res.verdict = verdict->first;
                res.route = verdict->second;
            }
            break;
        }
    }
    return res;
}

}  // namespace

ScrambleReport verify_scrambling(const CodeStream& s, const CodeStream& t, const std::vector<ScheduleEvent>& events,
                                 std::size_t prefix_len, std::string pair_label) {
    ScrambleReport rep;
    rep.pair = pair_label.empty() ? s.str() + " vs " + t.str() : std::move(pair_label);
    for (const auto& ev : events) tally(rep, run_event(ev, s, &t, std::nullopt, prefix_len));
    return rep;
}

ScrambleReport rational_vs_tau(const ExtendedRational& r, const CodeStream& tau, unsigned k_lo, unsigned k_hi,
                               const Rational& eps, std::size_t prefix_len) {
    check_k_range(k_lo, k_hi);
    if (r.is_infinite()) throw std::invalid_argument("rational_vs_tau: r must be finite");
    const std::uint64_t e = escape_time(r);
    const ExtendedRational cycle_r[3] = {ExtendedRational(0, 1), ExtendedRational::infinity(), ExtendedRational(1, 1)};
    const ExtendedRational cycle_tau[3] = {ExtendedRational::infinity(), ExtendedRational(1, 1),
                                           ExtendedRational(0, 1)};
    const unsigned aligned = static_cast<unsigned>((2 + 3 - e % 3) % 3);
    const Rational far_threshold(1000);
    ScrambleReport rep;
    rep.pair = "r=" + r.str() + " vs " + tau.str();
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        const BlockLayout L = BlockLayout::make(k);
        for (unsigned id = 0; id < 3; ++id) {
            const std::uint64_t R = L.run_start(id);
            for (std::uint64_t off = 0; off < 3; ++off) {
                const std::uint64_t n = R + off;
                if (n < e) continue;
                const ExtendedRational& rv = cycle_r[(n - e) % 3];
                const ExtendedRational& target = cycle_tau[(id + off) % 3];
                ScheduleEvent ev;
                ev.index = n;
                ev.k = k;
                if (id == aligned) {
                    if (target.is_infinite()) continue;
                    ev.kind = EventKind::close;
                    ev.threshold = eps;
                    ev.source = "aligned run " + std::to_string(id) + " target " + target.str();
                } else {
                    if (!rv.is_infinite()) continue;
                    ev.kind = EventKind::far;
                    ev.threshold = far_threshold;
                    ev.source = "misaligned run " + std::to_string(id) + " target " + target.str();
                }
                tally(rep, run_event(ev, tau, nullptr, FareyInterval(rv, rv), prefix_len));
                if (id != aligned) break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------- g

Rational g_map(const Rational& x) {
    if (x < 0 || x > 1) throw std::domain_error("g_map: argument outside [0, 1]");
    static const Rational xs[5] = {Rational(0), Rational(1, 6), Rational(1, 3), Rational(1, 2), Rational(1)};
    static const Rational ys[5] = {Rational(1), Rational(1, 3), Rational(1, 6), Rational(0), Rational(1, 2)};
    for (int i = 0; i < 4; ++i) {
        if (x <= xs[i + 1]) {
            Rational v = ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i]);
            v.canonicalize();
            return v;
        }
    }
    return ys[4];
}

}  // namespace phidyn
