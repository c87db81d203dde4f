#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace bf {

using Int = long long;
using Rational = boost::rational<long long>;

inline Int add_ck(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int sub_ck(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int mul_ck(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

template <class T> T add_ck(const T& a, const T& b) { return a + b; }
template <class T> T sub_ck(const T& a, const T& b) { return a - b; }
template <class T> T mul_ck(const T& a, const T& b) { return a * b; }

// Gaussian integers, used where i = sqrt(-1) enters exactly.
struct Gauss {
    Int re = 0;
    Int im = 0;

    Gauss() = default;
    Gauss(Int r, Int i = 0) : re(r), im(i) {}

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {add_ck(a.re, b.re), add_ck(a.im, b.im)}; }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return {sub_ck(a.re, b.re), sub_ck(a.im, b.im)}; }
    friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b)
    {
        return {sub_ck(mul_ck(a.re, b.re), mul_ck(a.im, b.im)), add_ck(mul_ck(a.re, b.im), mul_ck(a.im, b.re))};
    }
    Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
    Gauss& operator-=(const Gauss& o) { return *this = *this - o; }
    Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << "(" << g.re << "," << g.im << ")"; }
};

// i^k
inline Gauss ipow(Int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

inline std::complex<double> to_complex(Int v) { return {double(v), 0.0}; }
inline std::complex<double> to_complex(const Rational& v) { return {double(v.numerator()) / double(v.denominator()), 0.0}; }
inline std::complex<double> to_complex(const Gauss& g) { return {double(g.re), double(g.im)}; }

// Exact quotient a/b, throwing when b does not divide a.
inline Int exact_quot(Int a, Int b)
{
    if (b == 0 || a % b != 0)
        throw std::domain_error("non-exact integer division");
    return a / b;
}
inline Rational exact_quot(const Rational& a, const Rational& b)
{
    // comparing boost::rational with a plain int recurses forever under C++20 rewritten operators
    if (b == Rational(0))
        throw std::domain_error("division by zero");
    return a / b;
}
inline Gauss exact_quot(const Gauss& a, const Gauss& b)
{
    Int n = add_ck(mul_ck(b.re, b.re), mul_ck(b.im, b.im));
    Gauss p = a * Gauss{b.re, -b.im};
    return {exact_quot(p.re, n), exact_quot(p.im, n)};
}

} // namespace bf
