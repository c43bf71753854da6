#pragma once

// Text formats: fractions "p/q" (inf = "1/0"), surds "(p+q√d)/r" or
// "(p+q*sqrt(d))/r", decimals, words, codes "pre(period)", intervals "a/b..c/d".

#include "phidyn/coding.hpp"
#include "phidyn/numeric.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace phidyn {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::string_view input, std::size_t position, const std::string& what);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

ExtendedRational parse_extended_rational(std::string_view text);
/// Nonnegative rational from "p/q", "p" or a decimal "12.375".
Rational parse_rational(std::string_view text);
QuadraticSurd parse_surd(std::string_view text);
/// Any of the above; surds with a rational value come back as ExtendedRational.
Point parse_point(std::string_view text);
Word parse_word(std::string_view text);
/// "pre(period)", "(period)", or a word followed by a combining overline/macron.
CodeStream parse_code(std::string_view text);
FareyInterval parse_interval(std::string_view text);
/// "a..b" or "a".
std::pair<unsigned, unsigned> parse_k_range(std::string_view text);

std::string fraction_string(const Rational& q);  // always "p/q"

}  // namespace phidyn
