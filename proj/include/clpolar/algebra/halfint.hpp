#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace clpolar::algebra {

// Element of (1/2)Z, stored as twice its value. Houses the family parameter e
// (0, 1/2, 1, 3/2, 2) and q-power exponents that mix e with integers.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int whole) : twice(2 * whole) {}
    static constexpr HalfInt from_twice(int t) { return HalfInt{t, 0}; }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr bool is_integer() const { return (twice & 1) == 0; }
    constexpr int whole() const {
        return twice / 2; // caller must ensure is_integer()
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
    friend constexpr HalfInt operator*(HalfInt a, int k) { return from_twice(a.twice * k); }
    friend constexpr HalfInt operator*(int k, HalfInt a) { return a * k; }
    friend constexpr HalfInt operator+(HalfInt a, int k) { return from_twice(a.twice + 2 * k); }
    friend constexpr HalfInt operator+(int k, HalfInt a) { return a + k; }
    friend constexpr HalfInt operator-(HalfInt a, int k) { return from_twice(a.twice - 2 * k); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(whole());
        return std::to_string(twice) + "/2";
    }

private:
    constexpr HalfInt(int t, int) : twice(t) {}
};

} // namespace clpolar::algebra
