#include "phidyn/cli.hpp"

#include "phidyn/coding.hpp"
#include "phidyn/conjugacy.hpp"
#include "phidyn/entropy.hpp"
#include "phidyn/io.hpp"
#include "phidyn/numeric.hpp"
#include "phidyn/scrambled.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace phidyn {

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

struct Result {
    json doc;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    int code = kOk;
};

struct Globals {
    std::string precision = "1/1000000";
    std::size_t max_prefix = 4096;
    std::string k_range = "5..7";
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string out;
};

std::string decimal(long double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

json approx(long double v) {
    if (!std::isfinite(v)) return nullptr;
    return static_cast<double>(v);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

bool in_cycle(const Point& p) {
    const auto* r = std::get_if<ExtendedRational>(&p);
    return r && (r->is_zero() || r->is_infinite() || *r == ExtendedRational(1, 1));
}

Rational positive_rational(const std::string& text, const char* what) {
    const Rational q = parse_rational(text);
    if (q <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
    return q;
}

std::pair<unsigned, unsigned> block_range(const Globals& g) {
    const auto range = parse_k_range(g.k_range);
    if (range.first < 5 || range.second > kMaxBlockK) {
        throw std::invalid_argument("k range must lie within 5.." + std::to_string(kMaxBlockK));
    }
    return range;
}

std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void render(const Result& r, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << r.doc.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << csv_field(r.columns[c]);
        os << "\n";
        for (const auto& row : r.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
            os << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = display_width(r.columns[c]);
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
            width[c] = std::max(width[c], display_width(row[c]));
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << cells[c];
            if (c + 1 < cells.size()) os << std::string(width[c] - display_width(cells[c]), ' ');
        }
        os << "\n";
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
}

// ---------------------------------------------------------------- commands

Result cmd_iterate(const std::string& x_text, unsigned n) {
    Point p = parse_point(x_text);
    Result r;
    r.columns = {"step", "value", "approx", "in_cycle"};
    json rows = json::array();
    json entered = nullptr;
    if (in_cycle(p)) entered = 0;
    for (unsigned step = 1; step <= n; ++step) {
        p = phi(p);
        const bool cyc = in_cycle(p);
        if (cyc && entered.is_null()) entered = step;
        const long double v = to_long_double(p);
        r.rows.push_back({std::to_string(step), to_string(p), decimal(v), yes_no(cyc)});
        rows.push_back({{"step", step}, {"value", to_string(p)}, {"approx", approx(v)}, {"in_cycle", cyc}});
    }
    r.doc = {{"input", to_string(parse_point(x_text))}, {"rows", rows}, {"enters_cycle_at", entered}};
    return r;
}

Result cmd_code(const std::string& x_text, std::size_t length, bool one_leading) {
    const Point p = parse_point(x_text);
    const TieRule rule = one_leading ? TieRule::one_leading : TieRule::zero_leading;
    const std::string word = itinerary(p, length, rule).str();
    const std::string rule_name = one_leading ? "one-leading" : "zero-leading";
    Result r;
    r.columns = {"point", "rule", "itinerary"};
    r.rows = {{to_string(p), rule_name, word}};
    r.doc = {{"point", to_string(p)}, {"rule", rule_name}, {"length", length}, {"itinerary", word}};
    return r;
}

Result cmd_interval(const std::vector<std::string>& words) {
    Result r;
    r.columns = {"word", "interval"};
    json rows = json::array();
    IntervalUnion pieces;
    for (const auto& text : words) {
        const Word w = parse_word(text);
        const FareyInterval iv = cylinder(w);
        pieces.push_back(iv);
        r.rows.push_back({w.str(), iv.str()});
        rows.push_back({{"word", w.str()}, {"interval", iv.str()}});
    }
    const std::string u = to_string(normalize_union(pieces));
    if (words.size() > 1) r.rows.push_back({"union", u});
    r.doc = {{"cylinders", rows}, {"union", u}};
    return r;
}

Result cmd_point(const std::string& code_text, const Globals& g) {
    const CodeStream s = parse_code(code_text);
    const Rational goal = positive_rational(g.precision, "--precision");
    const CodeEnclosure e = point_of_code(s, g.max_prefix, goal);
    const auto w = e.interval.width();
    const std::string width = w ? fraction_string(*w) : "inf";
    const long double lo = e.interval.lo().to_long_double();
    const long double hi = e.interval.hi().to_long_double();
    Result r;
    r.columns = {"code", "enclosure", "prefix_len", "width", "goal_reached", "lo_approx", "hi_approx"};
    r.rows = {{s.str(), e.interval.str(), std::to_string(e.prefix_len), width, yes_no(e.goal_reached), decimal(lo),
               decimal(hi)}};
    r.doc = {{"code", s.str()},
             {"enclosure", e.interval.str()},
             {"prefix_len", e.prefix_len},
             {"width", width},
             {"width_goal", fraction_string(goal)},
             {"goal_reached", e.goal_reached},
             {"lo_approx", approx(lo)},
             {"hi_approx", approx(hi)}};
    r.code = e.goal_reached ? kOk : kInconclusive;
    return r;
}

Result cmd_conjugacy(unsigned n, unsigned cap) {
    if (n > cap) throw std::invalid_argument("level " + std::to_string(n) + " exceeds --cap " + std::to_string(cap));
    const FareyLevel level = farey_level(n, cap);
    Result r;
    r.columns = {"index", "fraction", "h", "check"};
    json rows = json::array();
    bool all = true;
    for (std::size_t i = 0; i < level.entries.size(); ++i) {
        const auto& x = level.entries[i];
        const bool ok = conjugacy_check(x);
        all = all && ok;
        const std::string h = h_rational(x).str();
        r.rows.push_back({std::to_string(i), x.str(), h, yes_no(ok)});
        rows.push_back({{"index", i}, {"fraction", x.str()}, {"h", h}, {"check", ok}});
    }
    r.doc = {{"n", n}, {"rows", rows}, {"all_pass", all}};
    r.code = all ? kOk : kFail;
    return r;
}

Result cmd_farey(unsigned n) {
    const FareyReport rep = farey_properties_report(n);
    Result r;
    r.columns = {"identity", "pass", "checked", "counterexample", "note"};
    json ids = json::array();
    for (const auto& id : rep.identities) {
        const std::string cx = id.counterexample.value_or("");
        r.rows.push_back({id.name, yes_no(id.pass), std::to_string(id.checked), cx, id.note});
        json j = {{"identity", id.name}, {"pass", id.pass}, {"checked", id.checked}, {"note", id.note}};
        j["counterexample"] = id.counterexample ? json(*id.counterexample) : json(nullptr);
        ids.push_back(j);
    }
    r.doc = {{"n", n}, {"identities", ids}, {"all_pass", rep.all_pass()}};
    r.code = rep.all_pass() ? kOk : kFail;
    return r;
}

long double method_tolerance(const std::string& method) { return method == "lap-count" ? 2e-2L : 1e-6L; }

Result cmd_entropy(std::vector<std::string> methods, unsigned depth, long double tol) {
    const std::vector<std::string> all = {"polynomial-root", "word-growth", "spectral", "lap-count"};
    if (methods.empty() || std::find(methods.begin(), methods.end(), "all") != methods.end()) methods = all;
    std::vector<EntropyEstimate> est;
    std::vector<std::string> notes;
    for (const auto& m : all) {
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) continue;
        if (m == "polynomial-root") est.push_back(entropy_polynomial_root(tol));
        if (m == "word-growth") est.push_back(entropy_word_growth(depth));
        if (m == "spectral") est.push_back(transition_spectral_radius(depth));
        if (m == "lap-count") {
            const unsigned d = std::min(depth, kMaxLapDepth);
            if (d < depth) notes.push_back("lap-count depth clamped to " + std::to_string(d));
            est.push_back(entropy_lap_count(d));
        }
    }
    bool agree = true;
    for (std::size_t i = 0; i < est.size(); ++i) {
        for (std::size_t j = i + 1; j < est.size(); ++j) {
            const long double t = std::max(method_tolerance(est[i].method), method_tolerance(est[j].method));
            if (std::fabs(est[i].value - est[j].value) > t) agree = false;
        }
    }
    Result r;
    r.columns = {"method", "value", "lambda", "error_bound", "depth", "tolerance"};
    json rows = json::array();
    for (const auto& e : est) {
        const std::string bound = e.error_bound < 0 ? "" : decimal(e.error_bound);
        r.rows.push_back({e.method, decimal(e.value), decimal(e.lambda), bound, std::to_string(e.depth),
                          decimal(method_tolerance(e.method))});
        json j = {{"method", e.method},
                  {"value", approx(e.value)},
                  {"lambda", approx(e.lambda)},
                  {"depth", e.depth},
                  {"tolerance", approx(method_tolerance(e.method))}};
        j["error_bound"] = e.error_bound < 0 ? json(nullptr) : approx(e.error_bound);
        rows.push_back(j);
    }
    r.doc = {{"estimates", rows},
             {"reference", approx(kLogGolden)},
             {"agree", agree},
             {"factorization_holds", entropy_polynomial_factorization_holds()},
             {"notes", notes}};
    r.code = agree ? kOk : kFail;
    return r;
}

Result cmd_mixing(const std::string& text) {
    const MixingCertificate cert = mixing_certificate(parse_word(text));
    const bool ok = certificate_consistent(cert);
    Result r;
    r.columns = {"step", "image"};
    json steps = json::array();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const std::string img = to_string(cert.steps[i]);
        r.rows.push_back({std::to_string(i), img});
        steps.push_back(img);
    }
    r.doc = {{"word", cert.word.str()}, {"n_cover", cert.n_cover}, {"steps", steps}, {"consistent", ok}};
    r.code = ok ? kOk : kFail;
    return r;
}

Point iterate_phi(Point x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x = phi(x);
    return x;
}

Result cmd_periodic(const std::string& word_text, const std::string& code_text) {
    Word pre;
    Word period;
    Point x;
    Word shown;
    std::string label;
    if (!code_text.empty()) {
        const CodeStream s = parse_code(code_text);
        pre = s.preperiod();
        period = s.period();
        x = periodic_point(pre, period);
        label = s.str();
        shown = pre.concat(period);
    } else {
        const Word w = parse_word(word_text);
        period = w.concat(Word::parse("000"));
        x = dense_periodic_witness(w);
        label = w.str();
        shown = w;
    }
    const bool inside = cylinder(shown).contains(x);
    const Point y = iterate_phi(x, pre.size());
    const bool periodic = iterate_phi(y, period.size()) == y;
    const long double v = to_long_double(x);
    Result r;
    r.columns = {"input", "point", "approx", "period", "preperiod", "in_cylinder", "periodic"};
    r.rows = {{label, to_string(x), decimal(v), std::to_string(period.size()), std::to_string(pre.size()),
               yes_no(inside), yes_no(periodic)}};
    r.doc = {{"input", label},
             {"point", to_string(x)},
             {"approx", approx(v)},
             {"period", period.size()},
             {"preperiod", pre.size()},
             {"cylinder", cylinder(shown).str()},
             {"in_cylinder", inside},
             {"periodic", periodic}};
    r.code = inside && periodic ? kOk : kFail;
    return r;
}

struct ScrambleArgs {
    std::string mode;
    std::string beta;
    std::string xi;
    std::string eta;
    std::vector<std::string> rationals;
    std::vector<std::string> tracked;
    std::vector<std::uint64_t> shifts{0};
    std::size_t pairs = 1;
    std::string eps = "1/100";
    std::string m_big;
    std::string alpha = "padded";
    unsigned track_i = 1;
    unsigned track_j = 1;
};

json event_json(const EventResult& e) {
    return {{"index", std::to_string(e.event.index)},
            {"kind", to_string(e.event.kind)},
            {"source", e.event.source},
            {"threshold", fraction_string(e.event.threshold)},
            {"k", e.event.k},
            {"verdict", to_string(e.verdict)},
            {"route", e.route},
            {"lower", e.lower.str()},
            {"upper", e.upper.str()},
            {"prefix_used", e.prefix_used},
            {"enclosure_s", e.enclosure_s.str()},
            {"enclosure_t", e.enclosure_t.str()}};
}

json report_json(const ScrambleReport& rep) {
    json events = json::array();
    for (const auto& e : rep.results) events.push_back(event_json(e));
    return {{"pair", rep.pair},
            {"passed", rep.passed},
            {"failed", rep.failed},
            {"inconclusive", rep.inconclusive},
            {"decided_rate", rep.decided_rate()},
            {"max_lower", rep.max_lower.str()},
            {"min_upper", rep.min_upper.str()},
            {"events", events}};
}

Result cmd_scramble(const ScrambleArgs& a, const Globals& g) {
    const auto [k_lo, k_hi] = block_range(g);
    const Rational eps = positive_rational(a.eps, "--eps");
    const Rational m_big = positive_rational(a.m_big.empty() ? (a.mode == "theorem1" ? "3/2" : "1000") : a.m_big,
                                             "--m-big");
    const AlphaSource src = a.alpha == "shortlex" ? AlphaSource::shortlex : AlphaSource::padded_blocks;

    std::vector<CodeStream> tracked;
    for (const auto& t : a.tracked) tracked.push_back(parse_code(t));
    if (tracked.empty()) tracked = default_tracked_codes();

    const std::string& second = a.mode == "theorem1" ? a.xi : a.eta;
    std::vector<std::pair<CodeStream, CodeStream>> pairs;
    if (!a.beta.empty()) {
        const CodeStream b = parse_code(a.beta);
        pairs.emplace_back(b, second.empty() ? b : parse_code(second));
    } else {
        pairs = seeded_pairs(g.seed, a.pairs, a.mode == "theorem1");
    }

    std::vector<ScrambleReport> reports;
    if (a.mode == "theorem1") {
        for (const auto& [eta, xi] : pairs) {
            for (auto i : a.shifts) {
                const auto ev = theorem1_events(eta, xi, i, k_lo, k_hi, eps, m_big);
                reports.push_back(verify_scrambling(mu_code(eta), mu_code(xi).shifted(i), ev, g.max_prefix,
                                                    "mu[" + eta.str() + "] vs mu[" + xi.str() + "]>>" +
                                                        std::to_string(i)));
            }
        }
    } else {
        const CodeStream alpha = alpha_transitive(src);
        for (const auto& [beta, eta] : pairs) {
            const CodeStream tb = tau_code(beta, alpha, tracked);
            if (a.mode == "theorem2") {
                const CodeStream te = tau_code(eta, alpha, tracked);
                for (auto i : a.shifts) {
                    const auto ev = theorem2_events(tb, te, beta, eta, i, k_lo, k_hi, eps, m_big);
                    reports.push_back(verify_scrambling(tb, te.shifted(i), ev, g.max_prefix,
                                                        "tau[" + beta.str() + "] vs tau[" + eta.str() + "]>>" +
                                                            std::to_string(i)));
                }
            } else if (a.mode == "rational") {
                const std::vector<std::string> rs =
                    a.rationals.empty() ? std::vector<std::string>{"1", "0", "3/5", "7/3"} : a.rationals;
                for (const auto& text : rs) {
                    const ExtendedRational x = parse_extended_rational(text);
                    if (x.is_infinite()) throw std::invalid_argument("--r must be finite");
                    reports.push_back(rational_vs_tau(x, tb, k_lo, k_hi, eps, g.max_prefix));
                }
            } else {
                const CodeStream& x = tracked[(a.track_i - 1) % tracked.size()];
                const auto ev = tracking_events(x, a.track_i, a.track_j, k_lo, k_hi, eps, m_big);
                reports.push_back(verify_scrambling(x, tb.shifted(a.track_j - 1), ev, g.max_prefix,
                                                    x.str() + " vs tau[" + beta.str() + "]>>" +
                                                        std::to_string(a.track_j - 1)));
            }
        }
    }

    Result r;
    r.columns = {"pair", "k", "index", "kind", "source", "threshold", "verdict", "route", "lower", "upper",
                 "prefix_used"};
    std::size_t passed = 0, failed = 0, inconclusive = 0;
    json reps = json::array();
    for (const auto& rep : reports) {
        passed += rep.passed;
        failed += rep.failed;
        inconclusive += rep.inconclusive;
        reps.push_back(report_json(rep));
        for (const auto& e : rep.results) {
            r.rows.push_back({rep.pair, std::to_string(e.event.k), std::to_string(e.event.index),
                              to_string(e.event.kind), e.event.source, fraction_string(e.event.threshold),
                              to_string(e.verdict), e.route, e.lower.str(), e.upper.str(),
                              std::to_string(e.prefix_used)});
        }
    }
    const std::size_t total = passed + failed + inconclusive;
    r.doc = {{"mode", a.mode},
             {"k_range", std::to_string(k_lo) + ".." + std::to_string(k_hi)},
             {"prefix_budget", g.max_prefix},
             {"reports", reps},
             {"passed", passed},
             {"failed", failed},
             {"inconclusive", inconclusive},
             {"decided_rate", total == 0 ? 1.0 : static_cast<double>(passed + failed) / static_cast<double>(total)}};
    r.code = failed ? kFail : (inconclusive ? kInconclusive : kOk);
    return r;
}

std::vector<Rational> period_two_samples(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> den(25, 10000);
    std::vector<Rational> out;
    const Rational lo(1, 6), mid(1, 4), hi(1, 3);
    while (out.size() < count) {
        const unsigned long q = den(rng);
        std::uniform_int_distribution<unsigned long> num(q / 6, q / 3 + 1);
        Rational x(BigInt(num(rng)), BigInt(q));
        x.canonicalize();
        if (x <= lo || x >= hi || x == mid) continue;
        out.push_back(x);
    }
    return out;
}

Result cmd_gdemo(std::size_t samples, std::uint64_t seed) {
    Result r;
    r.columns = {"check", "pass", "detail"};
    json nodes = json::object();
    bool nodes_ok = true;
    const std::vector<std::pair<Rational, Rational>> expect = {
        {Rational(0), Rational(1)}, {Rational(1, 6), Rational(1, 3)}, {Rational(1, 3), Rational(1, 6)},
        {Rational(1, 2), Rational(0)}, {Rational(1), Rational(1, 2)}};
    std::string node_detail;
    for (const auto& [x, y] : expect) {
        const Rational gx = g_map(x);
        nodes[fraction_string(x)] = fraction_string(gx);
        nodes_ok = nodes_ok && gx == y;
        node_detail += (node_detail.empty() ? "" : " ") + fraction_string(x) + "->" + fraction_string(gx);
    }
    const Rational quarter(1, 4);
    const bool fixed = g_map(quarter) == quarter;
    bool cycle = true;
    for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1)}) cycle = cycle && g_map(g_map(g_map(x))) == x;
    bool period_two = true;
    json counter = nullptr;
    for (const Rational& x : period_two_samples(seed, samples)) {
        if (g_map(g_map(x)) != x || g_map(x) == x) {
            period_two = false;
            if (counter.is_null()) counter = fraction_string(x);
        }
    }
    r.rows = {{"nodes", yes_no(nodes_ok), node_detail},
              {"fixed_quarter", yes_no(fixed), "g(1/4)=" + fraction_string(g_map(quarter))},
              {"period_three", yes_no(cycle), "0 -> 1 -> 1/2 -> 0"},
              {"period_two", yes_no(period_two), std::to_string(samples) + " samples"}};
    r.doc = {{"nodes", nodes},
             {"fixed_quarter", fixed},
             {"period_three", cycle},
             {"period_two", {{"samples", samples}, {"all_pass", period_two}, {"counterexample", counter}}}};
    r.code = nodes_ok && fixed && cycle && period_two ? kOk : kFail;
    return r;
}

Result cmd_plot(const std::string& kind, std::size_t samples, const std::string& lo_text, const std::string& hi_text,
                unsigned level) {
    Result r;
    r.columns = {"x", "y"};
    json pts = json::array();
    auto add = [&](long double x, long double y) {
        r.rows.push_back({decimal(x), decimal(y)});
        pts.push_back(json::array({approx(x), approx(y)}));
    };
    if (kind == "phi") {
        const Rational lo = parse_rational(lo_text);
        const Rational hi = parse_rational(hi_text);
        if (hi <= lo || samples < 2) throw std::invalid_argument("plot phi needs lo < hi and at least 2 samples");
        for (std::size_t i = 0; i < samples; ++i) {
            Rational x = lo + (hi - lo) * Rational(BigInt(static_cast<unsigned long>(i)),
                                                   BigInt(static_cast<unsigned long>(samples - 1)));
            x.canonicalize();
            const ExtendedRational ex = ExtendedRational::from_rational(x);
            add(ex.to_long_double(), phi_rat(ex).to_long_double());
        }
    } else {
        for (const auto& x : farey_level(level).entries) add(x.to_long_double(), h_rational(x).to_long_double());
    }
    r.doc = {{"kind", kind}, {"points", pts}};
    return r;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbolic dynamics of x -> |1 - 1/x| on [0, inf]", "phidyn"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--precision", g.precision, "enclosure width goal (p/q or decimal)")->capture_default_str();
    app.add_option("--max-prefix", g.max_prefix, "symbol budget for enclosures")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--k-range", g.k_range, "block range a..b")->capture_default_str();
    app.add_option("--format", g.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for sampled codes and rationals")->capture_default_str();
    app.add_option("--out", g.out, "write output to a file");

    std::vector<std::pair<CLI::App*, std::function<Result()>>> handlers;

    std::string x_text;
    unsigned iter_n = 10;
    auto* iterate = app.add_subcommand("iterate", "orbit of a point");
    iterate->add_option("x", x_text, "fraction, decimal or surd")->required();
    iterate->add_option("n", iter_n, "steps")->check(CLI::Range(0u, 100000u));
    handlers.emplace_back(iterate, [&] { return cmd_iterate(x_text, iter_n); });

    std::string code_point;
    std::size_t code_len = 16;
    bool one_leading = false;
    auto* code = app.add_subcommand("code", "itinerary of a point");
    code->add_option("x", code_point)->required();
    code->add_option("-n,--length", code_len)->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    code->add_flag("--one-leading", one_leading, "emit 1 at the point 1");
    handlers.emplace_back(code, [&] { return cmd_code(code_point, code_len, one_leading); });

    std::vector<std::string> words;
    auto* interval = app.add_subcommand("interval", "cylinder of one or more words");
    interval->add_option("words", words)->required();
    handlers.emplace_back(interval, [&] { return cmd_interval(words); });

    std::string point_code;
    auto* point = app.add_subcommand("point", "enclosure of the point with a given code");
    point->add_option("code", point_code, "pre(period)")->required();
    handlers.emplace_back(point, [&] { return cmd_point(point_code, g); });

    unsigned conj_n = 3;
    unsigned conj_cap = 12;
    auto* conj = app.add_subcommand("conjugacy", "h on the level-n Farey nodes");
    conj->add_option("n", conj_n)->capture_default_str();
    conj->add_option("--cap", conj_cap)->check(CLI::Range(0u, kDefaultMaxFareyLevel))->capture_default_str();
    handlers.emplace_back(conj, [&] { return cmd_conjugacy(conj_n, conj_cap); });

    unsigned farey_n = 3;
    auto* farey = app.add_subcommand("farey", "identities of the Farey levels");
    farey->add_option("n", farey_n)->check(CLI::Range(1u, 20u))->capture_default_str();
    handlers.emplace_back(farey, [&] { return cmd_farey(farey_n); });

    std::vector<std::string> methods;
    unsigned ent_depth = 40;
    long double ent_tol = 1e-12L;
    auto* entropy = app.add_subcommand("entropy", "topological entropy estimates");
    entropy->add_option("--method", methods)
        ->check(CLI::IsMember({"all", "polynomial-root", "word-growth", "spectral", "lap-count"}));
    entropy->add_option("--depth", ent_depth)->check(CLI::Range(1u, 10000u))->capture_default_str();
    entropy->add_option("--tol", ent_tol)->check(CLI::PositiveNumber);
    handlers.emplace_back(entropy, [&] { return cmd_entropy(methods, ent_depth, ent_tol); });

    std::string mix_word;
    auto* mixing = app.add_subcommand("mixing", "images of a cylinder until they cover [0, inf]");
    mixing->add_option("word", mix_word)->required();
    handlers.emplace_back(mixing, [&] { return cmd_mixing(mix_word); });

    std::string per_word;
    std::string per_code;
    auto* periodic = app.add_subcommand("periodic", "periodic point in a cylinder, or of a periodic code");
    auto* per_word_opt = periodic->add_option("word", per_word);
    auto* per_code_opt = periodic->add_option("--code", per_code, "pre(period)");
    per_word_opt->excludes(per_code_opt);
    periodic->require_option(1);
    handlers.emplace_back(periodic, [&] { return cmd_periodic(per_word, per_code); });

    ScrambleArgs sa;
    auto* scramble = app.add_subcommand("scramble", "scheduled closeness and separation events");
    scramble->add_option("mode", sa.mode)
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "rational", "tracking"}));
    scramble->add_option("--beta", sa.beta, "first code, pre(period)");
    scramble->add_option("--xi", sa.xi, "second code for theorem1");
    scramble->add_option("--eta", sa.eta, "second code for theorem2");
    scramble->add_option("--pairs", sa.pairs, "seeded pairs when --beta is absent")->check(CLI::Range(1, 1000));
    scramble->add_option("--shift", sa.shifts, "shifts of the second code")->capture_default_str();
    scramble->add_option("--r", sa.rationals, "rationals for the rational mode");
    scramble->add_option("--track", sa.tracked, "tracked codes x(1), x(2), ...");
    scramble->add_option("--track-i", sa.track_i)->check(CLI::PositiveNumber);
    scramble->add_option("--track-j", sa.track_j)->check(CLI::PositiveNumber);
    scramble->add_option("--eps", sa.eps)->capture_default_str();
    scramble->add_option("--m-big", sa.m_big, "far threshold (3/2 for theorem1, 1000 otherwise)");
    scramble->add_option("--alpha", sa.alpha)->check(CLI::IsMember({"padded", "shortlex"}))->capture_default_str();
    handlers.emplace_back(scramble, [&] { return cmd_scramble(sa, g); });

    std::size_t g_samples = 50;
    auto* gdemo = app.add_subcommand("gdemo", "the piecewise-linear map g");
    gdemo->add_option("--samples", g_samples)->check(CLI::Range(0, 100000))->capture_default_str();
    handlers.emplace_back(gdemo, [&] { return cmd_gdemo(g_samples, g.seed); });

    std::string plot_kind;
    std::size_t plot_samples = 201;
    std::string plot_lo = "0";
    std::string plot_hi = "4";
    unsigned plot_level = 6;
    auto* plot = app.add_subcommand("plot", "x,y data for phi on a grid or h on Farey nodes");
    plot->add_option("kind", plot_kind)->required()->check(CLI::IsMember({"phi", "h"}));
    plot->add_option("--samples", plot_samples)->capture_default_str();
    plot->add_option("--lo", plot_lo)->capture_default_str();
    plot->add_option("--hi", plot_hi)->capture_default_str();
    plot->add_option("--level", plot_level)->check(CLI::Range(0u, 16u))->capture_default_str();
    handlers.emplace_back(plot, [&] { return cmd_plot(plot_kind, plot_samples, plot_lo, plot_hi, plot_level); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    Result result;
    try {
        for (auto& [sub, run] : handlers) {
            if (sub->parsed()) result = run();
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (g.out.empty()) {
        render(result, g.format, out);
    } else {
        std::ofstream file(g.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << g.out << "\n";
            return kUsage;
        }
        render(result, g.format, file);
    }
    return result.code;
}

}  // namespace phidyn
