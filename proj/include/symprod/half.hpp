#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace symprod {

/// An element of ½ℤ stored as its doubled integer value.
class Half {
public:
    constexpr Half() = default;

    static constexpr Half from_twice(std::int64_t twice) { return Half(twice); }
    static constexpr Half from_int(std::int64_t v) { return Half(2 * v); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Only meaningful when is_integer().
    constexpr std::int64_t as_integer() const { return twice_ / 2; }
    /// Parity of an integral value; odd strict halves report false.
    constexpr bool is_odd_integer() const { return is_integer() && (as_integer() % 2 != 0); }

    constexpr Half operator-() const { return Half(-twice_); }
    constexpr Half operator+(Half o) const { return Half(twice_ + o.twice_); }
    constexpr Half operator-(Half o) const { return Half(twice_ - o.twice_); }
    constexpr Half operator*(std::int64_t k) const { return Half(twice_ * k); }
    constexpr Half& operator+=(Half o) { twice_ += o.twice_; return *this; }

    constexpr auto operator<=>(const Half&) const = default;

    /// "3", "-2", "3/2", "-1/2".
    std::string str() const {
        if (is_integer()) return std::to_string(as_integer());
        return std::to_string(twice_) + "/2";
    }

private:
    constexpr explicit Half(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Half h) { return os << h.str(); }

} // namespace symprod
