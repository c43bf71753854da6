#include "phidyn/io.hpp"

#include <cctype>

namespace phidyn {

namespace {

constexpr std::string_view kMinus = "\xE2\x88\x92";     // U+2212
constexpr std::string_view kRadical = "\xE2\x88\x9A";   // U+221A
constexpr std::string_view kInfinity = "\xE2\x88\x9E";  // U+221E
constexpr std::string_view kOverline = "\xCC\x85";      // U+0305
constexpr std::string_view kMacron = "\xCC\x84";        // U+0304

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= s_.size(); }
    std::string_view rest() const { return s_.substr(pos_); }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(std::string_view token) {
        skip_space();
        if (rest().substr(0, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    bool eat_minus() { return eat("-") || eat(kMinus); }
    void expect(std::string_view token, const char* what) {
        if (!eat(token)) fail(std::string("expected ") + what);
    }
    BigInt unsigned_int(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }
    std::string digits() {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    bool at_digit() {
        skip_space();
        return !done() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    void finish() {
        skip_space();
        if (!done()) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(s_, pos_, what); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

bool contains(std::string_view s, std::string_view token) { return s.find(token) != std::string_view::npos; }

BigInt radicand(Cursor& c) {
    if (c.eat(kRadical)) {
        if (c.eat("(")) {
            BigInt d = c.unsigned_int("radicand");
            c.expect(")", "')'");
            return d;
        }
        return c.unsigned_int("radicand");
    }
    c.eat("*");
    c.expect("sqrt", "'\xE2\x88\x9A' or 'sqrt'");
    c.expect("(", "'('");
    BigInt d = c.unsigned_int("radicand");
    c.expect(")", "')'");
    return d;
}

bool at_radical(Cursor& c) {
    c.skip_space();
    const auto r = c.rest();
    return r.substr(0, kRadical.size()) == kRadical || r.substr(0, 4) == "sqrt" || r.substr(0, 5) == "*sqrt";
}

Rational decimal_or_fraction(Cursor& c) {
    if (c.eat_minus()) c.fail("points of [0, inf] are nonnegative");
    BigInt whole = c.unsigned_int("digits");
    if (c.eat(".")) {
        const std::string frac = c.digits();
        if (frac.empty()) c.fail("expected digits after '.'");
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational q(BigInt(whole * scale + BigInt(frac)), scale);
        q.canonicalize();
        return q;
    }
    if (c.eat("/")) {
        BigInt den = c.unsigned_int("denominator");
        if (den == 0) c.fail("zero denominator");
        Rational q(whole, den);
        q.canonicalize();
        return q;
    }
    return Rational(whole);
}

}  // namespace

ParseError::ParseError(std::string_view input, std::size_t position, const std::string& what)
    : std::invalid_argument("parse error at position " + std::to_string(position) + " in '" + std::string(input) +
                            "': " + what),
      position_(position) {}

ExtendedRational parse_extended_rational(std::string_view text) {
    Cursor c(text);
    if (c.eat("inf") || c.eat(kInfinity)) {
        c.finish();
        return ExtendedRational::infinity();
    }
    if (c.eat_minus()) c.fail("points of [0, inf] are nonnegative");
    BigInt num = c.unsigned_int("numerator");
    BigInt den = 1;
    if (c.eat("/")) den = c.unsigned_int("denominator");
    if (num == 0 && den == 0) c.fail("0/0 is not a point");
    c.finish();
    return ExtendedRational(num, den);
}

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    Rational q = decimal_or_fraction(c);
    c.finish();
    return q;
}

QuadraticSurd parse_surd(std::string_view text) {
    Cursor c(text);
    if (at_radical(c)) {
        BigInt d = radicand(c);
        BigInt r = 1;
        if (c.eat("/")) r = c.unsigned_int("denominator");
        c.finish();
        if (r == 0) c.fail("zero denominator");
        return QuadraticSurd(0, 1, d, r);
    }
    c.expect("(", "'(' opening a surd");
    const bool neg_p = c.eat_minus();
    BigInt p = c.unsigned_int("integer part p");
    if (neg_p) p = -p;
    BigInt q = 0;
    BigInt d = 0;
    c.skip_space();
    bool minus = false;
    if (c.eat("+")) {
        minus = false;
    } else if (c.eat_minus()) {
        minus = true;
    } else {
        c.fail("expected '+' or '-' before the radical part");
    }
    q = c.at_digit() ? c.unsigned_int("coefficient q") : BigInt(1);
    d = radicand(c);
    if (minus) q = -q;
    c.expect(")", "')' closing the surd");
    BigInt r = 1;
    if (c.eat("/")) r = c.unsigned_int("denominator r");
    if (r == 0) c.fail("zero denominator");
    c.finish();
    return QuadraticSurd(p, q, d, r);
}

Point parse_point(std::string_view text) {
    if (contains(text, kRadical) || contains(text, "sqrt")) {
        QuadraticSurd s = parse_surd(text);
        if (s.sign() < 0) throw ParseError(text, 0, "surd value is negative");
        return make_point(s);
    }
    if (contains(text, ".")) return ExtendedRational::from_rational(parse_rational(text));
    return parse_extended_rational(text);
}

Word parse_word(std::string_view text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1') throw ParseError(text, i, "words use only the symbols 0 and 1");
        w.push_back(ch - '0');
    }
    return w;
}

CodeStream parse_code(std::string_view text) {
    for (auto mark : {kOverline, kMacron}) {
        if (text.size() > mark.size() && text.substr(text.size() - mark.size()) == mark) {
            const std::string_view body = text.substr(0, text.size() - mark.size());
            if (body.empty()) throw ParseError(text, 0, "empty period");
            return CodeStream::periodic(Word(), parse_word(body));
        }
    }
    const auto open = text.find('(');
    if (open == std::string_view::npos) throw ParseError(text, text.size(), "expected '(' starting the period");
    if (text.empty() || text.back() != ')') throw ParseError(text, text.size(), "expected ')' ending the period");
    const std::string_view pre = text.substr(0, open);
    const std::string_view per = text.substr(open + 1, text.size() - open - 2);
    Word pw;
    Word qw;
    try {
        pw = parse_word(pre);
    } catch (const ParseError& e) {
        throw ParseError(text, e.position(), "words use only the symbols 0 and 1");
    }
    try {
        qw = parse_word(per);
    } catch (const ParseError& e) {
        throw ParseError(text, open + 1 + e.position(), "words use only the symbols 0 and 1");
    }
    if (qw.empty()) throw ParseError(text, open + 1, "empty period");
    return CodeStream::periodic(pw, qw);
}

FareyInterval parse_interval(std::string_view text) {
    const auto sep = text.find("..");
    if (sep == std::string_view::npos) throw ParseError(text, 0, "expected 'lo..hi'");
    ExtendedRational lo;
    ExtendedRational hi;
    try {
        lo = parse_extended_rational(text.substr(0, sep));
    } catch (const ParseError& e) {
        throw ParseError(text, e.position(), "bad lower endpoint");
    }
    try {
        hi = parse_extended_rational(text.substr(sep + 2));
    } catch (const ParseError& e) {
        throw ParseError(text, sep + 2 + e.position(), "bad upper endpoint");
    }
    if (hi < lo) throw ParseError(text, sep, "lower endpoint exceeds upper endpoint");
    return FareyInterval(lo, hi);
}

std::pair<unsigned, unsigned> parse_k_range(std::string_view text) {
    Cursor c(text);
    const BigInt a = c.unsigned_int("k");
    BigInt b = a;
    if (c.eat("..")) b = c.unsigned_int("upper k");
    c.finish();
    if (!a.fits_uint_p() || !b.fits_uint_p() || b < a) throw ParseError(text, 0, "invalid k range");
    return {static_cast<unsigned>(a.get_ui()), static_cast<unsigned>(b.get_ui())};
}

std::string fraction_string(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

}  // namespace phidyn
