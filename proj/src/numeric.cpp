#include "phidyn/numeric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace phidyn {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Splits d = s^2 * t with t square-free. Trial division up to cbrt(d); the
// cofactor then has at most two prime factors, so it is square-free unless it
// is itself a perfect square.
std::pair<BigInt, BigInt> square_free_split(BigInt d) {
    BigInt s = 1;
    if (d <= 1) return {s, d};
    BigInt t = 1;
    BigInt cbrt;
    mpz_root(cbrt.get_mpz_t(), d.get_mpz_t(), 3);
    cbrt += 1;
    for (unsigned long p = 2; BigInt(p) <= cbrt; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), p) == 0) continue;
        unsigned count = 0;
        while (mpz_divisible_ui_p(d.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) s *= p;
        if (count % 2 == 1) t *= p;
        mpz_root(cbrt.get_mpz_t(), d.get_mpz_t(), 3);
        cbrt += 1;
    }
    if (d > 1) {
        if (mpz_perfect_square_p(d.get_mpz_t()) != 0) {
            BigInt root;
            mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
            s *= root;
        } else {
            t *= d;
        }
    }
    return {s, t};
}

// Canonical surd from parts where d is already square-free (or 0/1).
QuadraticSurd canonical_surd(BigInt p, BigInt q, const BigInt& d, BigInt r) {
    return QuadraticSurd(std::move(p), std::move(q), d, std::move(r));
}

std::string frac_str(const BigInt& n, const BigInt& d) { return n.get_str() + "/" + d.get_str(); }

}  // namespace

// ---------------------------------------------------------------- ExtendedRational

ExtendedRational::ExtendedRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ < 0 || den_ < 0) throw std::invalid_argument("ExtendedRational: negative component");
    if (num_ == 0 && den_ == 0) throw std::invalid_argument("ExtendedRational: 0/0");
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtendedRational ExtendedRational::from_rational(const Rational& q) {
    return ExtendedRational(q.get_num(), q.get_den());
}

Rational ExtendedRational::to_rational() const {
    if (is_infinite()) throw std::domain_error("ExtendedRational: inf has no rational value");
    return Rational(num_, den_);
}

long double ExtendedRational::to_long_double() const {
    if (is_infinite()) return std::numeric_limits<long double>::infinity();
    return static_cast<long double>(Rational(num_, den_).get_d());
}

std::string ExtendedRational::str() const { return frac_str(num_, den_); }

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    const int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- QuadraticSurd

QuadraticSurd::QuadraticSurd(BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (r_ == 0) throw std::invalid_argument("QuadraticSurd: zero denominator");
    if (d_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
    if (d_ > 1) {
        auto [s, t] = square_free_split(d_);
        q_ *= s;
        d_ = t;
    }
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
    }
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 0;
    }
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    BigInt g = gcd3(p_, q_, r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

QuadraticSurd QuadraticSurd::from_rational(const Rational& v) {
    return QuadraticSurd(v.get_num(), 0, 0, v.get_den());
}

int QuadraticSurd::sign() const {
    const int sp = sgn(p_);
    const int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    const int c = cmp(BigInt(p_ * p_), BigInt(q_ * q_ * d_));
    if (c > 0) return sp;
    if (c < 0) return sq;
    return 0;
}

int QuadraticSurd::compare(const Rational& v) const {
    // (p + q sqrt d)/r - n/m = ((p m - n r) + q m sqrt d) / (r m)
    const BigInt& n = v.get_num();
    const BigInt& m = v.get_den();
    QuadraticSurd diff(BigInt(p_ * m - n * r_), BigInt(q_ * m), d_, 1);
    return diff.sign();
}

int QuadraticSurd::compare(const QuadraticSurd& other) const { return (*this - other).sign(); }

Rational QuadraticSurd::rational_value() const {
    if (!is_rational()) throw std::domain_error("QuadraticSurd: value is irrational");
    Rational v(p_, r_);
    v.canonicalize();
    return v;
}

long double QuadraticSurd::to_long_double() const {
    mpf_class root(0, 512), pp(p_, 512), qq(q_, 512), rr(r_, 512), dd(d_, 512);
    root = sqrt(dd);
    mpf_class value(0, 512);
    if (sgn(p_) * sgn(q_) < 0) {
        // Rationalise to avoid cancellation between p and q sqrt d.
        mpf_class numer(BigInt(p_ * p_ - q_ * q_ * d_), 512);
        value = numer / (rr * (pp - qq * root));
    } else {
        value = (pp + qq * root) / rr;
    }
    return static_cast<long double>(value.get_d());
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return frac_str(p_, r_);
    std::string out = "(" + p_.get_str();
    out += (q_ < 0 ? "-" : "+");
    out += abs_big(q_).get_str() + "√" + d_.get_str() + ")/" + r_.get_str();
    return out;
}

QuadraticSurd QuadraticSurd::operator-() const { return canonical_surd(-p_, -q_, d_, r_); }

QuadraticSurd QuadraticSurd::inverse() const {
    if (sign() == 0) throw std::domain_error("QuadraticSurd: inverse of zero");
    // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
    BigInt norm = p_ * p_ - q_ * q_ * d_;
    return canonical_surd(BigInt(r_ * p_), BigInt(-r_ * q_), d_, norm);
}

namespace {
const BigInt& common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.is_rational()) return b.d();
    if (b.is_rational() || a.d() == b.d()) return a.d();
    throw std::domain_error("QuadraticSurd: mixed radicands");
}
}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
    const BigInt& d = common_radicand(a, b);
    return canonical_surd(BigInt(a.p_ * b.r_ + b.p_ * a.r_), BigInt(a.q_ * b.r_ + b.q_ * a.r_), d,
                          BigInt(a.r_ * b.r_));
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    const BigInt& d = common_radicand(a, b);
    return canonical_surd(BigInt(a.p_ * b.p_ + a.q_ * b.q_ * d), BigInt(a.p_ * b.q_ + a.q_ * b.p_), d,
                          BigInt(a.r_ * b.r_));
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) { return a * b.inverse(); }

// ---------------------------------------------------------------- Point helpers

Point make_point(const QuadraticSurd& s) {
    if (!s.is_rational()) return s;
    return ExtendedRational::from_rational(s.rational_value());
}

Point make_point(const ExtendedRational& x) { return x; }

int compare(const Point& x, const ExtendedRational& y) {
    if (const auto* r = std::get_if<ExtendedRational>(&x)) {
        auto c = *r <=> y;
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    const auto& s = std::get<QuadraticSurd>(x);
    if (y.is_infinite()) return -1;
    return s.compare(y.to_rational());
}

bool operator==(const Point& x, const ExtendedRational& y) { return compare(x, y) == 0; }

bool is_rational_point(const Point& x) { return std::holds_alternative<ExtendedRational>(x); }

long double to_long_double(const Point& x) {
    return std::visit([](const auto& v) { return v.to_long_double(); }, x);
}

std::string to_string(const Point& x) {
    return std::visit([](const auto& v) { return v.str(); }, x);
}

// ---------------------------------------------------------------- FareyInterval

FareyInterval::FareyInterval(ExtendedRational lo, ExtendedRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("FareyInterval: lo > hi");
}

bool FareyInterval::contains(const Point& x) const { return compare(x, lo_) >= 0 && compare(x, hi_) <= 0; }

bool FareyInterval::contains(const FareyInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

std::optional<Rational> FareyInterval::width() const {
    if (hi_.is_infinite()) {
        if (lo_.is_infinite()) return Rational(0);
        return std::nullopt;
    }
    Rational w = hi_.to_rational() - lo_.to_rational();
    return w;
}

bool FareyInterval::is_unimodular() const {
    BigInt det = lo_.num() * hi_.den() - lo_.den() * hi_.num();
    return abs_big(det) == 1;
}

ExtendedRational FareyInterval::mediant() const {
    return ExtendedRational(BigInt(lo_.num() + hi_.num()), BigInt(lo_.den() + hi_.den()));
}

std::string FareyInterval::str() const { return lo_.str() + ".." + hi_.str(); }

// ---------------------------------------------------------------- MobiusMap

MobiusMap::MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const BigInt det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1) throw std::invalid_argument("MobiusMap: determinant must be +-1");
}

MobiusMap MobiusMap::branch_inverse(int symbol) {
    if (symbol == 0) return MobiusMap(0, 1, 1, 1);
    if (symbol == 1) return MobiusMap(0, 1, -1, 1);
    throw std::invalid_argument("MobiusMap: symbol must be 0 or 1");
}

int MobiusMap::determinant() const { return (a_ * d_ - b_ * c_) > 0 ? 1 : -1; }

bool MobiusMap::is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
    return MobiusMap(BigInt(a_ * in.a_ + b_ * in.c_), BigInt(a_ * in.b_ + b_ * in.d_),
                     BigInt(c_ * in.a_ + d_ * in.c_), BigInt(c_ * in.b_ + d_ * in.d_));
}

ExtendedRational MobiusMap::apply(const ExtendedRational& x) const {
    BigInt n = a_ * x.num() + b_ * x.den();
    BigInt m = c_ * x.num() + d_ * x.den();
    if (sgn(n) * sgn(m) < 0) throw std::domain_error("MobiusMap: image outside [0, inf]");
    return ExtendedRational(abs_big(n), abs_big(m));
}

QuadraticSurd MobiusMap::apply(const QuadraticSurd& x) const {
    if (x.is_rational()) {
        const Rational v = x.rational_value();
        if (v < 0) throw std::domain_error("MobiusMap: negative argument");
        ExtendedRational image = apply(ExtendedRational::from_rational(v));
        if (image.is_infinite()) throw std::domain_error("MobiusMap: image is inf");
        return QuadraticSurd::from_rational(image.to_rational());
    }
    QuadraticSurd numer(BigInt(a_ * x.p() + b_ * x.r()), BigInt(a_ * x.q()), x.d(), 1);
    QuadraticSurd denom(BigInt(c_ * x.p() + d_ * x.r()), BigInt(c_ * x.q()), x.d(), 1);
    QuadraticSurd image = numer / denom;
    if (image.sign() < 0) throw std::domain_error("MobiusMap: image outside [0, inf]");
    return image;
}

Point MobiusMap::apply(const Point& x) const {
    if (const auto* r = std::get_if<ExtendedRational>(&x)) return apply(*r);
    return make_point(apply(std::get<QuadraticSurd>(x)));
}

std::vector<Point> MobiusMap::fixed_points() const {
    if (is_identity()) throw std::invalid_argument("MobiusMap: identity fixes every point");
    std::vector<Point> out;
    if (c_ == 0) {
        // x -> (a x + b)/d with a, d = +-1
        if (a_ != d_) {
            BigInt num = b_;
            BigInt den = d_ - a_;
            if (den < 0) {
                num = -num;
                den = -den;
            }
            if (num >= 0) out.emplace_back(ExtendedRational(num, den));
        }
        out.emplace_back(ExtendedRational::infinity());
        return out;
    }
    // c x^2 + (d - a) x - b = 0
    const BigInt disc = (d_ - a_) * (d_ - a_) + 4 * b_ * c_;
    if (disc < 0) return out;
    const BigInt twice_c = 2 * c_;
    const BigInt lead = a_ - d_;
    std::vector<QuadraticSurd> roots;
    if (disc == 0) {
        roots.emplace_back(lead, 0, 0, twice_c);
    } else {
        roots.emplace_back(lead, 1, disc, twice_c);
        roots.emplace_back(lead, -1, disc, twice_c);
    }
    for (const auto& root : roots) {
        if (root.sign() >= 0) out.push_back(make_point(root));
    }
    std::sort(out.begin(), out.end(), [](const Point& x, const Point& y) {
        return to_long_double(x) < to_long_double(y);
    });
    return out;
}

Point mobius_fixed_point(const MobiusMap& m, const std::optional<FareyInterval>& within) {
    std::vector<Point> candidates = m.fixed_points();
    if (within) {
        std::erase_if(candidates, [&](const Point& p) { return !within->contains(p); });
    }
    if (candidates.empty()) throw std::domain_error("mobius_fixed_point: no fixed point in [0, inf]");
    if (candidates.size() > 1)
        throw std::domain_error("mobius_fixed_point: two fixed points, a disambiguating interval is required");
    return candidates.front();
}

// ---------------------------------------------------------------- DyadicRational

DyadicRational::DyadicRational(BigInt mantissa, std::uint64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
    if (mantissa_ < 0) throw std::invalid_argument("DyadicRational: negative mantissa");
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    const auto twos = static_cast<std::uint64_t>(mpz_scan1(mantissa_.get_mpz_t(), 0));
    const std::uint64_t drop = std::min(twos, exponent_);
    if (drop > 0) {
        mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), drop);
        exponent_ -= drop;
    }
    BigInt one_scaled;
    mpz_ui_pow_ui(one_scaled.get_mpz_t(), 2, exponent_);
    if (mantissa_ > one_scaled) throw std::invalid_argument("DyadicRational: value exceeds 1");
}

DyadicRational DyadicRational::midpoint(const DyadicRational& a, const DyadicRational& b) {
    const std::uint64_t e = std::max(a.exponent_, b.exponent_);
    BigInt ma = a.mantissa_;
    BigInt mb = b.mantissa_;
    mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), e - a.exponent_);
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), e - b.exponent_);
    return DyadicRational(BigInt(ma + mb), e + 1);
}

Rational DyadicRational::to_rational() const {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent_);
    Rational v(mantissa_, den);
    v.canonicalize();
    return v;
}

long double DyadicRational::to_long_double() const { return static_cast<long double>(to_rational().get_d()); }

std::string DyadicRational::str() const { return mantissa_.get_str() + "/2^" + std::to_string(exponent_); }

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    BigInt ma = a.mantissa_;
    BigInt mb = b.mantissa_;
    mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), b.exponent_);
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), a.exponent_);
    const int c = cmp(ma, mb);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Distance

std::string Distance::str() const {
    if (is_infinite()) return "inf";
    return frac_str(value->get_num(), value->get_den());
}

bool operator<(const Distance& a, const Distance& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value < *b.value;
}

// ---------------------------------------------------------------- phi

ExtendedRational phi_rat(const ExtendedRational& x) {
    if (x.is_zero()) return ExtendedRational::infinity();
    if (x.is_infinite()) return ExtendedRational(1, 1);
    // |1 - den/num| = |num - den| / num, already coprime.
    return ExtendedRational(abs_big(BigInt(x.num() - x.den())), x.num());
}

QuadraticSurd phi_surd(const QuadraticSurd& x) {
    const int s = x.sign();
    if (s == 0) throw std::domain_error("phi_surd: phi(0) = inf is not a surd");
    if (s < 0) throw std::domain_error("phi_surd: negative argument");
    QuadraticSurd one = QuadraticSurd::from_rational(Rational(1));
    QuadraticSurd image = one - x.inverse();
    return image.sign() < 0 ? -image : image;
}

Point phi(const Point& x) {
    if (const auto* r = std::get_if<ExtendedRational>(&x)) return phi_rat(*r);
    return make_point(phi_surd(std::get<QuadraticSurd>(x)));
}

std::uint64_t escape_time(const ExtendedRational& x) {
    ExtendedRational cur = x;
    std::uint64_t n = 0;
    while (!cur.is_zero()) {
        cur = phi_rat(cur);
        ++n;
    }
    return n;
}

std::uint64_t factorial_u64(unsigned k) {
    if (k > 20) throw std::overflow_error("factorial_u64: k! exceeds 64 bits");
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace phidyn
