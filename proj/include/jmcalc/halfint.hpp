#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace jmcalc {

// Exact element of (1/2)Z, stored as twice its value. No floating point
// arithmetic is used anywhere in this library.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice_(2 * n) {}

    // Value p/2 from the doubled integer p.
    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // True for elements of Z + 1/2 (odd doubled value).
    constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // "p/2" for half-odd values, plain integer otherwise.
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    // Accepts "p/2", an integer literal, or a trailing ".5" decimal.
    static HalfInt parse(const std::string& s);

private:
    std::int64_t twice_ = 0;
};

inline HalfInt HalfInt::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty half-integer literal");
    std::size_t pos = 0;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (s.substr(slash + 1) != "2")
            throw std::invalid_argument("half-integer denominator must be 2: " + s);
        std::int64_t num = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("bad half-integer literal: " + s);
        return from_twice(num);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        auto frac = s.substr(dot + 1);
        if (frac != "5" && frac != "0")
            throw std::invalid_argument("only .0/.5 decimals are exact: " + s);
        std::int64_t whole = std::stoll(s.substr(0, dot), &pos);
        if (pos != dot) throw std::invalid_argument("bad half-integer literal: " + s);
        std::int64_t t = 2 * whole;
        if (frac == "5") t += (s[0] == '-') ? -1 : 1;
        return from_twice(t);
    }
    std::int64_t whole = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad half-integer literal: " + s);
    return HalfInt(static_cast<int>(whole));
}

// Exact quarter-integer, the home of segment centers (x+y)/2.
struct Quarter {
    std::int64_t quads = 0;  // value = quads/4

    constexpr Quarter() = default;
    constexpr explicit Quarter(std::int64_t q) : quads(q) {}
    static constexpr Quarter from_halfint_sum(HalfInt x, HalfInt y) {
        return Quarter(x.twice() + y.twice());
    }
    friend constexpr auto operator<=>(Quarter, Quarter) = default;
    constexpr bool positive() const { return quads > 0; }
    constexpr bool negative() const { return quads < 0; }
    constexpr Quarter operator-() const { return Quarter(-quads); }
};

}  // namespace jmcalc

template <>
struct std::hash<jmcalc::HalfInt> {
    std::size_t operator()(jmcalc::HalfInt h) const noexcept {
        return std::hash<std::int64_t>{}(h.twice());
    }
};
