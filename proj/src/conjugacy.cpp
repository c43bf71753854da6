#include "phidyn/conjugacy.hpp"

#include <stdexcept>

namespace phidyn {

namespace {

ExtendedRational mediant(const ExtendedRational& a, const ExtendedRational& b) {
    return ExtendedRational(BigInt(a.num() + b.num()), BigInt(a.den() + b.den()));
}

ExtendedRational add_vec(const ExtendedRational& a, const BigInt& t, const ExtendedRational& b) {
    return ExtendedRational(BigInt(a.num() + t * b.num()), BigInt(a.den() + t * b.den()));
}

BigInt pow2(std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Node bracket on the mediant tree: [lo, hi] with h-values index/2^depth and (index+1)/2^depth.
struct Bracket {
    ExtendedRational lo{0, 1};
    ExtendedRational hi = ExtendedRational::infinity();
    BigInt index = 0;
    std::uint64_t depth = 0;
    bool exact = false;  // x is the mediant of lo and hi
};

// Walks toward x = p/q (0 < x < inf) in batches of equal moves, stopping at
// max_depth (unbounded when 0 is passed as has_limit = false).
Bracket walk(const BigInt& p, const BigInt& q, bool has_limit, std::uint64_t max_depth) {
    Bracket b;
    while (!has_limit || b.depth < max_depth) {
        const BigInt right_gap = p * b.lo.den() - q * b.lo.num();  // > 0
        const BigInt left_gap = q * b.hi.num() - p * b.hi.den();   // > 0
        if (right_gap == left_gap) {
            b.exact = true;
            return b;
        }
        const bool go_right = right_gap > left_gap;
        BigInt t = go_right ? BigInt((right_gap - 1) / left_gap) : BigInt((left_gap - 1) / right_gap);
        if (has_limit) {
            const BigInt room(static_cast<unsigned long>(max_depth - b.depth));
            if (t > room) t = room;
        }
        if (!t.fits_ulong_p()) throw std::overflow_error("h: partial quotient too large");
        const unsigned long steps = t.get_ui();
        if (go_right) {
            b.lo = add_vec(b.lo, t, b.hi);
            b.index = (b.index + 1) * pow2(steps) - 1;
        } else {
            b.hi = add_vec(b.hi, t, b.lo);
            b.index = b.index * pow2(steps);
        }
        b.depth += steps;
    }
    return b;
}

}  // namespace

FareyLevel farey_level(unsigned n, unsigned max_level) {
    if (n > max_level) throw std::length_error("farey_level: level " + std::to_string(n) + " exceeds the guard");
    FareyLevel level;
    level.n = 0;
    level.entries = {ExtendedRational(0, 1), ExtendedRational::infinity()};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<ExtendedRational> next;
        next.reserve(2 * level.entries.size() - 1);
        for (std::size_t i = 0; i + 1 < level.entries.size(); ++i) {
            next.push_back(level.entries[i]);
            next.push_back(mediant(level.entries[i], level.entries[i + 1]));
        }
        next.push_back(level.entries.back());
        level.entries = std::move(next);
        level.n = k;
    }
    return level;
}

bool FareyReport::all_pass() const {
    for (const auto& id : identities) {
        if (!id.pass) return false;
    }
    return true;
}

namespace {

ExtendedRational reciprocal(const ExtendedRational& x) { return ExtendedRational(x.den(), x.num()); }

void record(IdentityCheck& check, bool ok, const std::string& detail) {
    ++check.checked;
    if (!ok && check.pass) {
        check.pass = false;
        check.counterexample = detail;
    }
}

}  // namespace

FareyReport farey_properties_report(unsigned n) {
    if (n == 0) throw std::invalid_argument("farey_properties_report: n must be positive");
    const FareyLevel lv = farey_level(n);
    const FareyLevel next = farey_level(n + 1);
    const auto& e = lv.entries;
    const std::size_t full = std::size_t{1} << n;
    const std::size_t half = full / 2;
    FareyReport report;
    report.n = n;

    IdentityCheck a;
    a.name = "a";
    for (std::size_t i = 0; i <= half; ++i) {
        record(a, e[i] == reciprocal(e[full - i]), "i=" + std::to_string(i));
    }

    IdentityCheck b;
    b.name = "b";
    for (std::size_t i = 0; i <= half; ++i) {
        const Rational sum = e[i].to_rational() + e[half - i].to_rational();
        record(b, sum == 1, "i=" + std::to_string(i));
    }

    IdentityCheck c;
    c.name = "c";
    c.note = "index 2^n+i is outside F_n; checked as phi(entry[2^(n-1)+i]) = entry[i]";
    for (std::size_t i = 0; i <= half; ++i) {
        record(c, phi_rat(e[half + i]) == e[i], "i=" + std::to_string(i));
    }

    IdentityCheck d;
    d.name = "d";
    for (std::size_t i = 0; i <= full; ++i) {
        record(d, phi_rat(next.entries[i]) == e[full - i], "i=" + std::to_string(i));
    }

    report.identities = {a, b, c, d};
    return report;
}

Rational f_map(const Rational& x) {
    if (x < 0 || x > 1) throw std::domain_error("f_map: argument outside [0, 1]");
    const Rational half(1, 2);
    if (x <= half) return Rational(1 - 2 * x);
    return Rational(x - half);
}

DyadicRational to_dyadic(const Rational& x) {
    if (x < 0 || x > 1) throw std::invalid_argument("to_dyadic: value outside [0, 1]");
    const BigInt& den = x.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) throw std::invalid_argument("to_dyadic: denominator is not a power of 2");
    return DyadicRational(x.get_num(), static_cast<std::uint64_t>(mpz_scan1(den.get_mpz_t(), 0)));
}

DyadicRational f_map(const DyadicRational& x) { return to_dyadic(f_map(x.to_rational())); }

DyadicRational h_rational(const ExtendedRational& x) {
    if (x.is_zero()) return DyadicRational(0, 0);
    if (x.is_infinite()) return DyadicRational(1, 0);
    const Bracket b = walk(x.num(), x.den(), false, 0);
    return DyadicRational(BigInt(2 * b.index + 1), b.depth + 1);
}

Rational h_level(unsigned n, const ExtendedRational& x) {
    if (n == 0) throw std::invalid_argument("h_level: n must be positive");
    const BigInt scale = pow2(n);
    const Rational top(BigInt(scale - 1), scale);
    if (x.is_zero()) return Rational(0);
    if (x.is_infinite()) return top;
    const Bracket b = walk(x.num(), x.den(), true, n);
    if (b.exact) {
        Rational v(BigInt(2 * b.index + 1), pow2(b.depth + 1));
        v.canonicalize();
        return v;
    }
    // b.depth == n: interpolate between consecutive level-n nodes.
    Rational lo_val(b.index, scale);
    lo_val.canonicalize();
    if (b.hi.is_infinite()) return lo_val;  // last segment, h_n(inf) = (2^n - 1)/2^n
    const Rational lo = b.lo.to_rational();
    const Rational hi = b.hi.to_rational();
    Rational v = lo_val + (x.to_rational() - lo) / (hi - lo) / scale;
    v.canonicalize();
    return v;
}

ExtendedRational h_inverse(const DyadicRational& d) {
    if (d.mantissa() == 0) return ExtendedRational(0, 1);
    const std::uint64_t e = d.exponent();
    if (e == 0) return ExtendedRational::infinity();
    // Binary digits b_1 .. b_e of d; b_1 .. b_{e-1} steer the walk, b_e = 1 stops it.
    ExtendedRational lo(0, 1);
    ExtendedRational hi = ExtendedRational::infinity();
    const mpz_srcptr m = d.mantissa().get_mpz_t();
    std::uint64_t j = 1;
    while (j < e) {
        const int bit = mpz_tstbit(m, e - j);
        std::uint64_t run = 1;
        while (j + run < e && mpz_tstbit(m, e - j - run) == bit) ++run;
        const BigInt t(static_cast<unsigned long>(run));
        if (bit == 1) {
            lo = add_vec(lo, t, hi);
        } else {
            hi = add_vec(hi, t, lo);
        }
        j += run;
    }
    return mediant(lo, hi);
}

bool conjugacy_check(const ExtendedRational& x) { return h_rational(phi_rat(x)) == f_map(h_rational(x)); }

DyadicEnclosure h_enclosure(const Point& x, unsigned depth) {
    if (const auto* r = std::get_if<ExtendedRational>(&x)) {
        const DyadicRational v = h_rational(*r);
        return {v, v};
    }
    const auto& s = std::get<QuadraticSurd>(x);
    ExtendedRational lo(0, 1);
    ExtendedRational hi = ExtendedRational::infinity();
    BigInt index = 0;
    for (unsigned k = 0; k < depth; ++k) {
        const ExtendedRational m = mediant(lo, hi);
        if (s.compare(m.to_rational()) > 0) {
            lo = m;
            index = 2 * index + 1;
        } else {
            hi = m;
            index = 2 * index;
        }
    }
    return {DyadicRational(index, depth), DyadicRational(BigInt(index + 1), depth)};
}

}  // namespace phidyn
