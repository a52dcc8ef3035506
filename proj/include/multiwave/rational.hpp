#ifndef MULTIWAVE_RATIONAL_HPP
#define MULTIWAVE_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "multiwave/types.hpp"

namespace mw {

// Exact rational arithmetic for the exponent algebra. Values stay tiny
// (Lebesgue exponents, regularity orders), but intermediates go through
// __int128 and overflow aborts loudly rather than wrapping.
struct Rat {
    std::int64_t num{0};
    std::int64_t den{1};  // > 0 always

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;  // "num/den", or "num" when den == 1

    static Rat parse(const std::string& text);  // accepts "a", "a/b"
};

Rat operator+(Rat x, Rat y);
Rat operator-(Rat x, Rat y);
Rat operator-(Rat x);
Rat operator*(Rat x, Rat y);
Rat operator/(Rat x, Rat y);
bool operator==(Rat x, Rat y);
bool operator!=(Rat x, Rat y);
bool operator<(Rat x, Rat y);
bool operator<=(Rat x, Rat y);
bool operator>(Rat x, Rat y);
bool operator>=(Rat x, Rat y);

// Lebesgue exponent in [1, inf]; infinity kept exact so reciprocals are exact.
struct Exponent {
    bool inf{false};
    Rat value{};  // meaningful when !inf

    Exponent() = default;
    Exponent(Rat v) : inf(false), value(v) {}
    Exponent(std::int64_t v) : inf(false), value(Rat(v)) {}
    static Exponent infinity() {
        Exponent e;
        e.inf = true;
        return e;
    }

    Rat reciprocal() const { return inf ? Rat(0) : Rat(value.den, value.num); }
    double to_double() const;
    std::string str() const { return inf ? "inf" : value.str(); }
    // Hoelder conjugate: 1/p + 1/p' = 1. p must be >= 1.
    Exponent conjugate() const;

    static Exponent parse(const std::string& text);  // "inf", "a", "a/b"
};

bool operator==(const Exponent& x, const Exponent& y);
bool operator!=(const Exponent& x, const Exponent& y);

}  // namespace mw

#endif
