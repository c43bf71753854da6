#pragma once

// Modified Farey sequences, the tent-like model f and the conjugacy h with h o phi = f o h.

#include "phidyn/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phidyn {

struct FareyLevel {
    unsigned n = 0;
    std::vector<ExtendedRational> entries;  // 2^n + 1 entries from 0/1 to 1/0
};

inline constexpr unsigned kDefaultMaxFareyLevel = 24;

/// Throws std::length_error when n exceeds max_level.
FareyLevel farey_level(unsigned n, unsigned max_level = kDefaultMaxFareyLevel);

struct IdentityCheck {
    std::string name;  // "a", "b", "c", "d"
    bool pass = true;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;
    std::string note;
};

struct FareyReport {
    unsigned n = 0;
    std::vector<IdentityCheck> identities;
    bool all_pass() const;
};

/// Identities (a)-(d) over level n (and n+1 for (d)). (c) is checked in the
/// form phi(entry[2^(n-1) + i]) = entry[i], 0 <= i <= 2^(n-1).
FareyReport farey_properties_report(unsigned n);

/// 1 - 2x on [0, 1/2], x - 1/2 on [1/2, 1]. Throws std::domain_error outside [0, 1].
Rational f_map(const Rational& x);
DyadicRational f_map(const DyadicRational& x);

/// Throws std::invalid_argument unless the denominator is a power of two and the value is in [0, 1].
DyadicRational to_dyadic(const Rational& x);

/// Modified Minkowski map, exact on rationals.
DyadicRational h_rational(const ExtendedRational& x);
/// Level-n piecewise-linear approximation h_n.
Rational h_level(unsigned n, const ExtendedRational& x);
ExtendedRational h_inverse(const DyadicRational& d);
bool conjugacy_check(const ExtendedRational& x);

struct DyadicEnclosure {
    DyadicRational lo;
    DyadicRational hi;
};

/// Bracketing node values of h after walking `depth` levels of the mediant tree.
/// Exact (lo == hi) when x is a node reached within that depth.
DyadicEnclosure h_enclosure(const Point& x, unsigned depth);

}  // namespace phidyn
