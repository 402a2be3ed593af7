#ifndef WIGNER_HALF_INT_HPP
#define WIGNER_HALF_INT_HPP

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

namespace wigner {

/// A half-integer stored exactly as twice its value.
///
/// Quantum numbers (j's) are non-negative; differences of quantum numbers
/// (d-matrix indices such as j13 - j1) may be negative, so the type itself
/// is signed and non-negativity is enforced at the operation boundaries.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int t)
    {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    /// Parses "26", "51/2" or "25.5".  Throws std::invalid_argument for
    /// anything that is not an exact half-integer.
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_negative() const { return twice_ < 0; }

    double to_double() const { return 0.5 * twice_; }

    /// "26" or "51/2"
    std::string str() const;

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b)
    {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b)
    {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h)
{
    return h.twice() < 0 ? -h : h;
}

/// True iff a + b + c is an integer (the triad can couple at all).
constexpr bool integer_coupled(HalfInt a, HalfInt b, HalfInt c)
{
    return (a.twice() + b.twice() + c.twice()) % 2 == 0;
}

/// Triangle selection rule: |a-b| <= c <= a+b with integer coupling.
constexpr bool triad_allowed(HalfInt a, HalfInt b, HalfInt c)
{
    if (a.is_negative() || b.is_negative() || c.is_negative()) return false;
    return integer_coupled(a, b, c) && abs(a - b) <= c && c <= a + b;
}

} // namespace wigner

#endif
