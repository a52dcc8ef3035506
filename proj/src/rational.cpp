#include "multiwave/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace mw {
namespace {

std::int64_t checked_cast(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw_invalid(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

Rat make_normalized(__int128 num, __int128 den, const char* what) {
    if (den == 0) throw_invalid("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    Rat r;
    r.num = checked_cast(num / a, what);
    r.den = checked_cast(den / a, what);
    return r;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) { *this = make_normalized(n, d, "construction"); }

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat Rat::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    errno = 0;
    char* end = nullptr;
    if (slash == std::string::npos) {
        long long n = std::strtoll(text.c_str(), &end, 10);
        if (errno != 0 || end == text.c_str() || *end != '\0')
            throw_invalid("bad rational literal: '" + text + "'");
        return Rat(n);
    }
    std::string ns = text.substr(0, slash);
    std::string ds = text.substr(slash + 1);
    long long n = std::strtoll(ns.c_str(), &end, 10);
    if (errno != 0 || end == ns.c_str() || *end != '\0')
        throw_invalid("bad rational literal: '" + text + "'");
    long long d = std::strtoll(ds.c_str(), &end, 10);
    if (errno != 0 || end == ds.c_str() || *end != '\0' || d == 0)
        throw_invalid("bad rational literal: '" + text + "'");
    return Rat(n, d);
}

Rat operator+(Rat x, Rat y) {
    return make_normalized(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                           static_cast<__int128>(x.den) * y.den, "addition");
}

Rat operator-(Rat x, Rat y) {
    return make_normalized(static_cast<__int128>(x.num) * y.den - static_cast<__int128>(y.num) * x.den,
                           static_cast<__int128>(x.den) * y.den, "subtraction");
}

Rat operator-(Rat x) { return Rat(-x.num, x.den); }

Rat operator*(Rat x, Rat y) {
    return make_normalized(static_cast<__int128>(x.num) * y.num,
                           static_cast<__int128>(x.den) * y.den, "multiplication");
}

Rat operator/(Rat x, Rat y) {
    if (y.num == 0) throw_invalid("rational division by zero");
    return make_normalized(static_cast<__int128>(x.num) * y.den,
                           static_cast<__int128>(x.den) * y.num, "division");
}

bool operator==(Rat x, Rat y) { return x.num == y.num && x.den == y.den; }
bool operator!=(Rat x, Rat y) { return !(x == y); }
bool operator<(Rat x, Rat y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
}
bool operator<=(Rat x, Rat y) { return x < y || x == y; }
bool operator>(Rat x, Rat y) { return y < x; }
bool operator>=(Rat x, Rat y) { return y <= x; }

double Exponent::to_double() const {
    return inf ? std::numeric_limits<double>::infinity() : value.to_double();
}

Exponent Exponent::conjugate() const {
    if (inf) return Exponent(Rat(1));
    if (value == Rat(1)) return Exponent::infinity();
    if (value < Rat(1)) throw_invalid("conjugate exponent requires p >= 1");
    return Exponent(value / (value - Rat(1)));
}

Exponent Exponent::parse(const std::string& text) {
    if (text == "inf" || text == "infinity") return Exponent::infinity();
    return Exponent(Rat::parse(text));
}

bool operator==(const Exponent& x, const Exponent& y) {
    if (x.inf || y.inf) return x.inf == y.inf;
    return x.value == y.value;
}
bool operator!=(const Exponent& x, const Exponent& y) { return !(x == y); }

}  // namespace mw
