#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace morsecat {

using Rat = boost::rational<long long>;

// "p/q" or plain integer; floats rejected
Rat parse_rational(std::string_view text);
std::string rat_str(const Rat& r);

// Exact rational extended with +inf / -inf sentinels.
class Level {
public:
    static Level neg_inf() { return Level(-1, Rat()); }
    static Level pos_inf() { return Level(+1, Rat()); }
    static Level of(const Rat& r) { return Level(0, r); }

    bool is_finite() const { return sign_ == 0; }
    bool is_pos_inf() const { return sign_ > 0; }
    bool is_neg_inf() const { return sign_ < 0; }
    const Rat& value() const; // finite only

    std::string to_string() const;
    static Level parse(std::string_view text); // accepts "inf" / "-inf"

    bool operator==(const Level& other) const {
        return sign_ == other.sign_ && (sign_ != 0 || value_ == other.value_);
    }
    std::strong_ordering operator<=>(const Level& other) const {
        if (auto c = sign_ <=> other.sign_; c != 0)
            return c;
        if (sign_ != 0)
            return std::strong_ordering::equal;
        return value_ < other.value_   ? std::strong_ordering::less
               : value_ > other.value_ ? std::strong_ordering::greater
                                       : std::strong_ordering::equal;
    }

private:
    Level(int sign, Rat value) : sign_(sign), value_(std::move(value)) {}
    int sign_;
    Rat value_;
};

} // namespace morsecat
