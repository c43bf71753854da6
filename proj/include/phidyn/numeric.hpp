#pragma once

// Exact arithmetic on the compactified half-line [0, inf] and the Moebius
// branch maps of phi(x) = |1 - 1/x|.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace phidyn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// A point of [0, inf] stored as a coprime pair num/den with inf = 1/0.
class ExtendedRational {
public:
    ExtendedRational() : num_(0), den_(1) {}
    /// Reduces to lowest terms; throws std::invalid_argument on negative input or 0/0.
    ExtendedRational(BigInt num, BigInt den);
    ExtendedRational(long num, long den) : ExtendedRational(BigInt(num), BigInt(den)) {}

    static ExtendedRational infinity() { return ExtendedRational(1, 0); }
    static ExtendedRational from_rational(const Rational& q);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    /// Throws std::domain_error for inf.
    Rational to_rational() const;
    long double to_long_double() const;
    std::string str() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    BigInt num_;
    BigInt den_;
};

/// Exact value (p + q*sqrt(d)) / r. Canonical form: r > 0, d square-free,
/// gcd(p, q, r) = 1, q == 0 exactly when d == 0.
class QuadraticSurd {
public:
    QuadraticSurd() : p_(0), q_(0), r_(1), d_(0) {}
    QuadraticSurd(BigInt p, BigInt q, BigInt d, BigInt r);

    static QuadraticSurd from_rational(const Rational& v);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& r() const { return r_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return q_ == 0; }

    int sign() const;
    /// Sign of (this - v), computed with integer comparisons only.
    int compare(const Rational& v) const;
    /// Requires a shared radicand (or one side rational); throws std::domain_error otherwise.
    int compare(const QuadraticSurd& other) const;
    Rational rational_value() const;  // requires is_rational()
    long double to_long_double() const;
    std::string str() const;

    QuadraticSurd operator-() const;
    QuadraticSurd inverse() const;
    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.d_ == b.d_;
    }

private:
    BigInt p_, q_, r_, d_;
};

/// A point of [0, inf]: an extended rational, or an irrational quadratic surd.
/// The surd alternative never holds a rational value (see make_point).
using Point = std::variant<ExtendedRational, QuadraticSurd>;

Point make_point(const QuadraticSurd& s);
Point make_point(const ExtendedRational& x);
int compare(const Point& x, const ExtendedRational& y);
bool operator==(const Point& x, const ExtendedRational& y);
bool is_rational_point(const Point& x);
long double to_long_double(const Point& x);
std::string to_string(const Point& x);

/// Closed interval [lo, hi] of [0, inf] with exact endpoints.
class FareyInterval {
public:
    FareyInterval() : lo_(0, 1), hi_(ExtendedRational::infinity()) {}
    /// Throws std::invalid_argument if lo > hi.
    FareyInterval(ExtendedRational lo, ExtendedRational hi);

    static FareyInterval whole() { return FareyInterval(); }

    const ExtendedRational& lo() const { return lo_; }
    const ExtendedRational& hi() const { return hi_; }

    bool contains(const Point& x) const;
    bool contains(const FareyInterval& other) const;
    bool is_degenerate() const { return lo_ == hi_; }
    /// nullopt when the width is infinite.
    std::optional<Rational> width() const;
    /// |b*c - a*d| == 1 for lo = b/a, hi = d/c.
    bool is_unimodular() const;
    ExtendedRational mediant() const;
    std::string str() const;

    friend bool operator==(const FareyInterval&, const FareyInterval&) = default;

private:
    ExtendedRational lo_;
    ExtendedRational hi_;
};

/// x -> (a x + b) / (c x + d) with determinant +-1.
class MobiusMap {
public:
    MobiusMap() : a_(1), b_(0), c_(0), d_(1) {}
    /// Throws std::invalid_argument unless a*d - b*c is +1 or -1.
    MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d);

    static MobiusMap identity() { return {}; }
    /// Inverse of phi on I_0 (y -> 1/(1+y)) for symbol 0, on I_1 (y -> 1/(1-y)) for symbol 1.
    static MobiusMap branch_inverse(int symbol);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }
    int determinant() const;
    bool is_identity() const;

    /// (*this) o inner.
    MobiusMap compose(const MobiusMap& inner) const;

    /// Projective action; throws std::domain_error when the image is negative.
    ExtendedRational apply(const ExtendedRational& x) const;
    QuadraticSurd apply(const QuadraticSurd& x) const;
    Point apply(const Point& x) const;

    /// All fixed points lying in [0, inf], in increasing order.
    std::vector<Point> fixed_points() const;

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

private:
    BigInt a_, b_, c_, d_;
};

/// The fixed point of m in [0, inf]; with two candidates, `within` picks the
/// one inside it. Throws std::domain_error if none (or no unique) candidate.
Point mobius_fixed_point(const MobiusMap& m, const std::optional<FareyInterval>& within = std::nullopt);

/// mantissa / 2^exponent in [0, 1]; mantissa odd whenever exponent > 0.
class DyadicRational {
public:
    DyadicRational() : mantissa_(0), exponent_(0) {}
    DyadicRational(BigInt mantissa, std::uint64_t exponent);

    static DyadicRational midpoint(const DyadicRational& a, const DyadicRational& b);

    const BigInt& mantissa() const { return mantissa_; }
    std::uint64_t exponent() const { return exponent_; }
    Rational to_rational() const;
    long double to_long_double() const;
    /// "m/2^e".
    std::string str() const;

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

private:
    BigInt mantissa_;
    std::uint64_t exponent_;
};

/// Sentinel-aware distance: nullopt value means infinite.
struct Distance {
    std::optional<Rational> value;

    static Distance infinite() { return {}; }
    static Distance finite(Rational v) { return {std::move(v)}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string str() const;
    friend bool operator<(const Distance& a, const Distance& b);
};

ExtendedRational phi_rat(const ExtendedRational& x);
/// Throws std::domain_error for the value 0 (its image inf is not a surd).
QuadraticSurd phi_surd(const QuadraticSurd& x);
Point phi(const Point& x);

/// Smallest n with phi^n(x) == 0.
std::uint64_t escape_time(const ExtendedRational& x);

std::uint64_t factorial_u64(unsigned k);  // throws std::overflow_error past 20!

}  // namespace phidyn
