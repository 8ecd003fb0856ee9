#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// (2n-1)!! = 1*3*5*...*(2n-1); n = 0 gives 1.
inline Int odd_double_factorial(int n) {
    Int r = 1;
    for (int i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int int_pow(Int base, int e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw std::invalid_argument("div_exact: " + a.str() + " not divisible by " + b.str());
    return a / b;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e == 0) return 1;
    bool inv = e < 0;
    if (inv && base == 0) throw std::domain_error("rat_pow: zero to a negative power");
    int k = inv ? -e : e;
    Rat r = 1;
    while (k-- > 0) r *= base;
    return inv ? Rat(1) / r : r;
}

inline std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace spk
