#include "phidyn/coding.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace phidyn {

// ---------------------------------------------------------------- Word

Word::Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    for (auto s : symbols_) {
        if (s > 1) throw std::invalid_argument("Word: symbols must be 0 or 1");
    }
}

Word Word::parse(std::string_view text) {
    std::vector<std::uint8_t> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("Word: unexpected character '" + std::string(1, c) + "' at position " +
                                        std::to_string(i));
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(std::move(out));
}

bool Word::admissible() const {
    for (std::size_t i = 1; i < symbols_.size(); ++i) {
        if (symbols_[i - 1] == 1 && symbols_[i] == 1) return false;
    }
    return true;
}

Word Word::prefix(std::size_t n) const {
    n = std::min(n, symbols_.size());
    return Word(std::vector<std::uint8_t>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::tail() const {
    if (symbols_.empty()) return {};
    return Word(std::vector<std::uint8_t>(symbols_.begin() + 1, symbols_.end()));
}

Word Word::concat(const Word& other) const {
    std::vector<std::uint8_t> out = symbols_;
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(out));
}

Word Word::repeat(std::size_t times) const {
    std::vector<std::uint8_t> out;
    out.reserve(symbols_.size() * times);
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), symbols_.begin(), symbols_.end());
    return Word(std::move(out));
}

void Word::push_back(int symbol) {
    if (symbol != 0 && symbol != 1) throw std::invalid_argument("Word: symbols must be 0 or 1");
    symbols_.push_back(static_cast<std::uint8_t>(symbol));
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (auto s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

// ---------------------------------------------------------------- CodeStream

CodeStream CodeStream::periodic(const Word& preperiod, const Word& period) {
    if (period.empty()) throw std::invalid_argument("CodeStream: empty period");
    std::vector<std::uint8_t> per = period.symbols();
    const std::size_t n = per.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = per[i] == per[i - d];
        if (repeats) {
            per.resize(d);
            break;
        }
    }
    std::vector<std::uint8_t> pre = preperiod.symbols();
    while (!pre.empty() && pre.back() == per.back()) {
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
        pre.pop_back();
    }
    CodeStream s;
    s.preperiod_ = Word(std::move(pre));
    s.period_ = Word(std::move(per));
    return s;
}

CodeStream CodeStream::procedural(std::string name, Generator generator) {
    CodeStream s;
    s.generator_ = std::make_shared<const Generator>(std::move(generator));
    s.name_ = std::move(name);
    return s;
}

int CodeStream::at(std::uint64_t n) const {
    if (generator_) {
        if (n > std::numeric_limits<std::uint64_t>::max() - offset_)
            throw std::overflow_error("CodeStream: index overflow");
        return (*generator_)(n + offset_);
    }
    if (n < preperiod_.size()) return preperiod_[static_cast<std::size_t>(n)];
    return period_[static_cast<std::size_t>((n - preperiod_.size()) % period_.size())];
}

Word CodeStream::prefix(std::size_t n) const {
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(at(i));
    return Word(std::move(out));
}

CodeStream CodeStream::shifted(std::uint64_t k) const {
    if (generator_) {
        if (k > std::numeric_limits<std::uint64_t>::max() - offset_)
            throw std::overflow_error("CodeStream: shift overflow");
        CodeStream s = *this;
        s.offset_ += k;
        return s;
    }
    if (k <= preperiod_.size()) {
        const auto& sym = preperiod_.symbols();
        return periodic(Word(std::vector<std::uint8_t>(sym.begin() + static_cast<std::ptrdiff_t>(k), sym.end())),
                        period_);
    }
    const std::size_t rot = static_cast<std::size_t>((k - preperiod_.size()) % period_.size());
    std::vector<std::uint8_t> per = period_.symbols();
    std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(rot), per.end());
    return periodic(Word(), Word(std::move(per)));
}

bool CodeStream::admissible_window(std::uint64_t from, std::uint64_t len) const {
    int prev = -1;
    for (std::uint64_t i = 0; i < len; ++i) {
        const int s = at(from + i);
        if (prev == 1 && s == 1) return false;
        prev = s;
    }
    return true;
}

bool CodeStream::admissible() const {
    if (generator_) return admissible_window(0, 4096);
    return preperiod_.concat(period_).concat(period_).admissible();
}

std::string CodeStream::str() const {
    if (generator_) return offset_ == 0 ? name_ : name_ + ">>" + std::to_string(offset_);
    return preperiod_.str() + "(" + period_.str() + ")";
}

CodeStream shift(const CodeStream& s, std::uint64_t k) { return s.shifted(k); }

// ---------------------------------------------------------------- cylinders

MobiusMap word_map(const Word& w) {
    MobiusMap m;
    for (std::size_t i = 0; i < w.size(); ++i) m = m.compose(MobiusMap::branch_inverse(w[i]));
    return m;
}

void CylinderRefiner::push(int symbol) {
    if (symbol != 0 && symbol != 1) throw std::invalid_argument("cylinder: symbols must be 0 or 1");
    if (last_ == 1 && symbol == 1) throw std::invalid_argument("cylinder: word contains the factor 11");
    if (length_ > 0) head_ = head_.compose(MobiusMap::branch_inverse(last_));
    last_ = symbol;
    ++length_;
    const ExtendedRational e0 = symbol == 0 ? ExtendedRational(0, 1) : ExtendedRational(1, 1);
    const ExtendedRational e1 = symbol == 0 ? ExtendedRational(1, 1) : ExtendedRational::infinity();
    ExtendedRational a = head_.apply(e0);
    ExtendedRational b = head_.apply(e1);
    if (b < a) std::swap(a, b);
    interval_ = FareyInterval(std::move(a), std::move(b));
}

FareyInterval cylinder(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cylinder: empty word");
    CylinderRefiner r;
    for (std::size_t i = 0; i < w.size(); ++i) r.push(w[i]);
    return r.interval();
}

Word itinerary(const Point& x, std::size_t n, TieRule rule) {
    const ExtendedRational one(1, 1);
    Word out;
    Point cur = x;
    bool tie_used = false;
    int prev = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const int c = compare(cur, one);
        int s = c > 0 ? 1 : 0;
        if (c == 0 && rule == TieRule::one_leading && !tie_used && prev != 1) {
            s = 1;
            tie_used = true;
        }
        out.push_back(s);
        prev = s;
        if (i + 1 < n) cur = phi(cur);
    }
    return out;
}

CodeEnclosure point_of_code(const CodeStream& s, std::size_t max_prefix, const Rational& width_goal) {
    if (max_prefix == 0) throw std::invalid_argument("point_of_code: max_prefix must be positive");
    CylinderRefiner r;
    for (std::size_t len = 1; len <= max_prefix; ++len) {
        r.push(s.at(len - 1));
        const auto w = r.interval().width();
        if (w && *w < width_goal) return {r.interval(), len, true};
    }
    return {r.interval(), max_prefix, false};
}

Point periodic_point(const Word& preperiod, const Word& period) {
    if (period.empty()) throw std::invalid_argument("periodic_point: empty period");
    if (!preperiod.concat(period).concat(period).admissible())
        throw std::invalid_argument("periodic_point: code contains the factor 11");
    const MobiusMap m = word_map(period);
    std::vector<Point> candidates = m.fixed_points();
    Word block = period;
    for (int j = 0; candidates.size() > 1 && j < 64; ++j) {
        const FareyInterval iv = cylinder(block);
        std::erase_if(candidates, [&](const Point& p) { return !iv.contains(p); });
        block = block.concat(period);
    }
    if (candidates.size() != 1) throw std::logic_error("periodic_point: fixed point not isolated");
    return word_map(preperiod).apply(candidates.front());
}

// ---------------------------------------------------------------- unions and images

IntervalUnion normalize_union(IntervalUnion pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const FareyInterval& a, const FareyInterval& b) {
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        return a.hi() < b.hi();
    });
    IntervalUnion out;
    for (auto& iv : pieces) {
        if (!out.empty() && iv.lo() <= out.back().hi()) {
            if (out.back().hi() < iv.hi()) out.back() = FareyInterval(out.back().lo(), iv.hi());
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

std::string to_string(const IntervalUnion& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += " U ";
        out += u[i].str();
    }
    return out;
}

IntervalUnion phi_interval_image(const FareyInterval& iv) {
    const ExtendedRational one(1, 1);
    if (iv.hi() <= one) return {FareyInterval(phi_rat(iv.hi()), phi_rat(iv.lo()))};
    if (iv.lo() >= one) return {FareyInterval(phi_rat(iv.lo()), phi_rat(iv.hi()))};
    return normalize_union({FareyInterval(ExtendedRational(0, 1), phi_rat(iv.lo())),
                            FareyInterval(ExtendedRational(0, 1), phi_rat(iv.hi()))});
}

IntervalUnion phi_union_image(const IntervalUnion& u) {
    IntervalUnion out;
    for (const auto& iv : u) {
        auto img = phi_interval_image(iv);
        out.insert(out.end(), img.begin(), img.end());
    }
    return normalize_union(std::move(out));
}

Rational sigma_metric(const CodeStream& s, const CodeStream& t, const Rational& tol) {
    if (tol <= 0) throw std::invalid_argument("sigma_metric: tol must be positive");
    Rational tail_bound(1);
    Rational weight(1, 2);
    Rational sum(0);
    for (std::uint64_t i = 0; tail_bound >= tol; ++i) {
        if (s.at(i) != t.at(i)) sum += weight;
        tail_bound /= 2;
        weight /= 2;
    }
    return sum;
}

}  // namespace phidyn
