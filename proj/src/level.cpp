#include "morsecat/level.hpp"

#include "morsecat/errors.hpp"

#include <charconv>

namespace morsecat {

namespace {

long long parse_ll(std::string_view s, std::string_view whole) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("not an exact rational: '" + std::string(whole) + "'");
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        throw DomainError("not an exact rational: ''");
    if (s.find_first_of(".eE") != std::string_view::npos)
        throw DomainError("not an exact rational: '" + std::string(text) +
                          "' (floats rejected)");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rat(parse_ll(s, text));
        long long p = parse_ll(s.substr(0, slash), text);
        long long q = parse_ll(s.substr(slash + 1), text);
        if (q == 0)
            throw DomainError("zero denominator: '" + std::string(text) + "'");
        return Rat(p, q);
    } catch (const boost::bad_rational&) {
        throw DomainError("zero denominator: '" + std::string(text) + "'");
    }
}

std::string rat_str(const Rat& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1)
        out += "/" + std::to_string(r.denominator());
    return out;
}

const Rat& Level::value() const {
    if (sign_ != 0)
        throw DomainError("infinite level has no rational value");
    return value_;
}

std::string Level::to_string() const {
    if (sign_ < 0)
        return "-inf";
    if (sign_ > 0)
        return "inf";
    return rat_str(value_);
}

Level Level::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "inf" || s == "+inf")
        return pos_inf();
    if (s == "-inf")
        return neg_inf();
    return of(parse_rational(s));
}

} // namespace morsecat
