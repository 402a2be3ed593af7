#include "wigner/half_int.hpp"

#include <charconv>
#include <stdexcept>

namespace wigner {

namespace {

int parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

} // namespace

HalfInt HalfInt::parse(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty half-integer");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.substr(slash + 1) != "2")
            throw std::invalid_argument("half-integers use denominator 2: '" +
                                        std::string(text) + "'");
        return from_twice(parse_int(text.substr(0, slash)));
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto frac = text.substr(dot + 1);
        int whole = dot == 0 ? 0 : parse_int(text.substr(0, dot));
        bool neg = !text.empty() && text[0] == '-';
        if (frac == "5")
            return from_twice(2 * whole + (neg ? -1 : 1));
        if (frac == "0" || frac == "00" || frac.empty())
            return from_twice(2 * whole);
        throw std::invalid_argument("not a half-integer: '" +
                                    std::string(text) + "'");
    }

    return HalfInt(parse_int(text));
}

std::string HalfInt::str() const
{
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

} // namespace wigner
