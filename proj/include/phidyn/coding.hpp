#pragma once

// Admissible 0-1 words, code streams, Farey cylinders and itineraries.

#include "phidyn/numeric.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace phidyn {

class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> symbols);
    /// Throws std::invalid_argument on characters other than '0'/'1'.
    static Word parse(std::string_view text);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    /// No factor "11".
    bool admissible() const;
    Word prefix(std::size_t n) const;
    Word tail() const;  // drops the first symbol
    Word concat(const Word& other) const;
    Word repeat(std::size_t times) const;
    void push_back(int symbol);
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<std::uint8_t> symbols_;
};

/// Lazily indexable infinite 0-1 sequence. Either eventually periodic
/// (preperiod + period, kept in normal form) or procedural.
class CodeStream {
public:
    using Generator = std::function<int(std::uint64_t)>;

    /// Normal form: minimal period, shortest preperiod. Throws if period is empty.
    static CodeStream periodic(const Word& preperiod, const Word& period);
    static CodeStream procedural(std::string name, Generator generator);

    int at(std::uint64_t n) const;
    bool is_periodic() const { return !generator_; }
    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }
    std::uint64_t offset() const { return offset_; }
    Word prefix(std::size_t n) const;
    CodeStream shifted(std::uint64_t k) const;
    /// Periodic streams: checks pre.period.period; procedural: the window [from, from+len).
    bool admissible_window(std::uint64_t from, std::uint64_t len) const;
    bool admissible() const;  // periodic streams only; procedural returns the first 4096 symbols' check
    /// "pre(period)" for periodic streams, "name" or "name>>k" for procedural ones.
    std::string str() const;

private:
    Word preperiod_;
    Word period_;
    std::shared_ptr<const Generator> generator_;
    std::string name_;
    std::uint64_t offset_ = 0;
};

CodeStream shift(const CodeStream& s, std::uint64_t k);

/// psi_{w0} o ... o psi_{w_{n-1}}.
MobiusMap word_map(const Word& w);

/// Exact cylinder of a nonempty admissible word; throws std::invalid_argument otherwise.
FareyInterval cylinder(const Word& w);

/// Incremental cylinder(prefix) for a growing word.
class CylinderRefiner {
public:
    /// Appends a symbol; throws std::invalid_argument on a "11" factor.
    void push(int symbol);
    std::size_t length() const { return length_; }
    /// Requires length() >= 1.
    const FareyInterval& interval() const { return interval_; }

private:
    MobiusMap head_;  // composition of every symbol but the last
    int last_ = -1;
    std::size_t length_ = 0;
    FareyInterval interval_;
};

enum class TieRule {
    zero_leading,  // emit 0 at the boundary point 1
    one_leading,   // emit 1 at the first tie that does not follow a 1
};

Word itinerary(const Point& x, std::size_t n, TieRule rule = TieRule::zero_leading);

struct CodeEnclosure {
    FareyInterval interval;
    std::size_t prefix_len = 0;
    bool goal_reached = false;
};

/// Shortest prefix (<= max_prefix) whose cylinder is narrower than width_goal.
CodeEnclosure point_of_code(const CodeStream& s, std::size_t max_prefix, const Rational& width_goal);

/// Exact point with code preperiod.(period)^inf.
Point periodic_point(const Word& preperiod, const Word& period);

using IntervalUnion = std::vector<FareyInterval>;

/// Sorted, with overlapping or touching pieces merged.
IntervalUnion normalize_union(IntervalUnion pieces);
std::string to_string(const IntervalUnion& u);

/// Exact phi-image: one piece, or two when the interval straddles 1.
IntervalUnion phi_interval_image(const FareyInterval& iv);
IntervalUnion phi_union_image(const IntervalUnion& u);

/// sum_i |s_i - t_i| / 2^(i+1), truncated so the neglected tail is < tol.
Rational sigma_metric(const CodeStream& s, const CodeStream& t, const Rational& tol);

}  // namespace phidyn
