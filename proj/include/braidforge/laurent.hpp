#pragma once

#include "braidforge/arith.hpp"

#include <algorithm>
#include <complex>
#include <concepts>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bf {

// Laurent polynomial in one variable with half-integer exponents.
// Exponents are stored doubled: coefficient c_[k] multiplies var^((lo_+k)/2).
template <class T = Int>
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const T& c) { if (c != T(0)) { c_.push_back(c); } }
    template <std::integral I>
    LaurentPoly(I c) : LaurentPoly(T(c)) {}

    static LaurentPoly monomial(const T& c, int dexp, char var = 't')
    {
        LaurentPoly p(c);
        p.lo_ = dexp;
        p.var_ = var;
        return p;
    }
    // var^(e) for integer e
    static LaurentPoly power(int e, char var = 't') { return monomial(T(1), 2 * e, var); }

    static LaurentPoly from_terms(const std::map<int, T>& terms, char var = 't')
    {
        LaurentPoly p;
        p.var_ = var;
        for (auto& [d, c] : terms)
            p.add_term(d, c);
        return p;
    }

    // integral polynomial from coefficients of var^lo, var^(lo+1), ...
    static LaurentPoly from_coeffs(int lo, const std::vector<T>& cs, char var = 't')
    {
        LaurentPoly p;
        p.var_ = var;
        for (size_t i = 0; i < cs.size(); ++i)
            p.add_term(2 * (lo + int(i)), cs[i]);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    char var() const { return var_; }
    LaurentPoly& set_var(char v) { var_ = v; return *this; }

    // doubled degrees
    int dmin() const { need_nonzero(); return lo_; }
    int dmax() const { need_nonzero(); return lo_ + int(c_.size()) - 1; }
    Rational min_deg() const { return Rational(dmin(), 2); }
    Rational max_deg() const { return Rational(dmax(), 2); }
    Rational span() const { return Rational(dmax() - dmin(), 2); }
    const T& min_cf() const { need_nonzero(); return c_.front(); }
    const T& max_cf() const { need_nonzero(); return c_.back(); }

    T coeff(int dexp) const
    {
        if (c_.empty() || dexp < lo_ || dexp > dmax())
            return T(0);
        return c_[dexp - lo_];
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != T(0))
                f(lo_ + int(k), c_[k]);
    }

    std::map<int, T> terms() const
    {
        std::map<int, T> m;
        for_each([&](int d, const T& c) { m[d] = c; });
        return m;
    }

    size_t term_count() const
    {
        size_t n = 0;
        for_each([&](int, const T&) { ++n; });
        return n;
    }

    // true if all doubled exponents share the parity p (0 = integral exponents)
    bool parity_is(int p) const
    {
        bool ok = true;
        for_each([&](int d, const T&) { if (((d % 2) + 2) % 2 != p) ok = false; });
        return ok;
    }
    bool is_integral() const { return parity_is(0); }

    void add_term(int dexp, const T& c)
    {
        if (c == T(0))
            return;
        if (c_.empty()) {
            lo_ = dexp;
            c_.push_back(c);
            return;
        }
        if (dexp < lo_) {
            c_.insert(c_.begin(), size_t(lo_ - dexp), T(0));
            lo_ = dexp;
        } else if (dexp > dmax()) {
            c_.resize(size_t(dexp - lo_ + 1), T(0));
        }
        c_[dexp - lo_] = add_ck(c_[dexp - lo_], c);
        trim();
    }

    // multiply by var^(d/2)
    LaurentPoly shifted(int d) const
    {
        LaurentPoly r = *this;
        if (!r.c_.empty())
            r.lo_ += d;
        return r;
    }

    // t -> 1/t
    LaurentPoly inverted() const
    {
        LaurentPoly r;
        r.var_ = var_;
        if (c_.empty())
            return r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.lo_ = -dmax();
        return r;
    }

    // var^(1/2) -> var, i.e. doubled exponents become ordinary ones in var2
    LaurentPoly halved_var(char var2) const
    {
        LaurentPoly r;
        r.var_ = var2;
        for_each([&](int d, const T& c) { r.add_term(2 * d, c); });
        return r;
    }

    // var -> var^k
    LaurentPoly scaled_exponents(int k) const
    {
        LaurentPoly r;
        r.var_ = var_;
        for_each([&](int d, const T& c) { r.add_term(d * k, c); });
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        adopt_var(o);
        o.for_each([&](int d, const T& c) { add_term_raw(d, c); });
        trim();
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        adopt_var(o);
        o.for_each([&](int d, const T& c) { add_term_raw(d, T(0) - c); });
        trim();
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a)
    {
        LaurentPoly r = a;
        for (auto& c : r.c_)
            c = T(0) - c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        r.var_ = a.is_const() ? b.var_ : a.var_;
        if (a.c_.empty() || b.c_.empty())
            return r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0))
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != T(0))
                    r.c_[i + j] = add_ck(r.c_[i + j], mul_ck(a.c_[i], b.c_[j]));
        }
        r.trim();
        return r;
    }
    friend LaurentPoly operator*(const T& s, const LaurentPoly& p) { return LaurentPoly(s) * p; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // strict weak order for use as map keys
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.c_.size() != b.c_.size())
            return a.c_.size() < b.c_.size();
        if (a.lo_ != b.lo_)
            return a.lo_ < b.lo_;
        return a.c_ < b.c_;
    }

    LaurentPoly pow(int k) const
    {
        if (k < 0)
            throw std::domain_error("negative power of a Laurent polynomial");
        LaurentPoly r(T(1)), b = *this;
        r.var_ = var_;
        while (k) {
            if (k & 1)
                r *= b;
            k >>= 1;
            if (k)
                b *= b;
        }
        return r;
    }

    // evaluation with s = var^(1/2) given explicitly (the branch is the caller's)
    std::complex<double> eval_half(std::complex<double> s) const
    {
        std::complex<double> acc = 0.0;
        if (c_.empty())
            return acc;
        // Horner in s from the top, then multiply by s^lo
        for (size_t k = c_.size(); k-- > 0;)
            acc = acc * s + to_complex(c_[k]);
        return acc * std::pow(s, lo_);
    }
    std::complex<double> eval(std::complex<double> t) const { return eval_half(std::sqrt(t)); }

    bool is_const() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
    T constant() const { return coeff(0); }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p)
    {
        if (p.c_.empty())
            return os << "0";
        bool first = true;
        p.for_each([&](int d, const T& c) {
            os << (first ? "" : " + ") << c;
            if (d)
                os << '*' << p.var_ << "^(" << d << "/2)";
            first = false;
        });
        return os;
    }

    const std::vector<T>& raw() const { return c_; }
    int raw_lo() const { return lo_; }

private:
    void need_nonzero() const
    {
        if (c_.empty())
            throw std::domain_error("degree of the zero polynomial");
    }
    void adopt_var(const LaurentPoly& o)
    {
        if (is_const())
            var_ = o.var_;
    }
    void add_term_raw(int dexp, const T& c)
    {
        if (c_.empty()) {
            lo_ = dexp;
            c_.push_back(c);
            return;
        }
        if (dexp < lo_) {
            c_.insert(c_.begin(), size_t(lo_ - dexp), T(0));
            lo_ = dexp;
        } else if (dexp > dmax()) {
            c_.resize(size_t(dexp - lo_ + 1), T(0));
        }
        c_[dexp - lo_] = add_ck(c_[dexp - lo_], c);
    }
    void trim()
    {
        size_t a = 0;
        while (a < c_.size() && c_[a] == T(0))
            ++a;
        if (a == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        size_t b = c_.size();
        while (c_[b - 1] == T(0))
            --b;
        c_.erase(c_.begin() + long(b), c_.end());
        c_.erase(c_.begin(), c_.begin() + long(a));
        lo_ += int(a);
    }

    int lo_ = 0;
    std::vector<T> c_;
    char var_ = 't';
};

using Poly = LaurentPoly<Int>;
using QPoly = LaurentPoly<Rational>;
using GPoly = LaurentPoly<Gauss>;

// Exact division a/b in the ring of Laurent polynomials in var^(1/2).
// Throws std::domain_error when b does not divide a.
template <class T>
LaurentPoly<T> exact_divide(const LaurentPoly<T>& a, const LaurentPoly<T>& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    LaurentPoly<T> q;
    q.set_var(a.is_const() ? b.var() : a.var());
    if (a.is_zero())
        return q;
    std::vector<T> rem = a.raw();
    const std::vector<T>& d = b.raw();
    const int n = int(rem.size()), m = int(d.size());
    if (n < m)
        throw std::domain_error("non-exact polynomial division");
    std::vector<T> qc(size_t(n - m + 1), T(0));
    for (int i = n - 1; i >= m - 1; --i) {
        if (rem[i] == T(0))
            continue;
        T f = exact_quot(rem[i], d[m - 1]);
        qc[size_t(i - m + 1)] = f;
        for (int j = 0; j < m; ++j)
            rem[i - m + 1 + j] = sub_ck(rem[i - m + 1 + j], mul_ck(f, d[j]));
    }
    for (int i = 0; i < m - 1; ++i)
        if (rem[i] != T(0))
            throw std::domain_error("non-exact polynomial division");
    for (size_t k = 0; k < qc.size(); ++k)
        q.add_term(a.raw_lo() - b.raw_lo() + int(k), qc[k]);
    return q;
}

template <class T>
bool divides(const LaurentPoly<T>& b, const LaurentPoly<T>& a)
{
    try {
        (void)exact_divide(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// (var^(1/2) - var^(-1/2))
template <class T = Int>
LaurentPoly<T> half_diff(char var = 't')
{
    return LaurentPoly<T>::monomial(T(1), 1, var) - LaurentPoly<T>::monomial(T(1), -1, var);
}

template <class U, class T>
LaurentPoly<U> convert(const LaurentPoly<T>& p)
{
    LaurentPoly<U> r;
    r.set_var(p.var());
    p.for_each([&](int d, const T& c) { r.add_term(d, U(c)); });
    return r;
}

// second derivative at var = 1: sum c k (k-1) with k = d/2
template <class T>
Rational second_derivative_at_one(const LaurentPoly<T>& p)
{
    Rational s = 0;
    p.for_each([&](int d, const T& c) { s += Rational(c) * Rational(d * (d - 2), 4); });
    return s;
}

template <class T>
Rational derivative_at(const LaurentPoly<T>& p, Int x)
{
    // integral exponents only
    Rational s = 0;
    p.for_each([&](int d, const T& c) {
        if (d % 2)
            throw std::domain_error("derivative of half-integral polynomial");
        int k = d / 2;
        Rational xp = 1;
        int e = k - 1;
        for (int i = 0; i < std::abs(e); ++i)
            xp *= Rational(x);
        if (e < 0)
            xp = Rational(1) / xp;
        s += Rational(c) * Rational(k) * xp;
    });
    return s;
}

// Laurent polynomial in two variables with doubled exponents.
template <class T = Int>
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;

    LaurentPoly2() = default;
    LaurentPoly2(const T& c) { if (c != T(0)) { m_[{0, 0}] = c; } }
    template <std::integral I>
    LaurentPoly2(I c) : LaurentPoly2(T(c)) {}

    static LaurentPoly2 monomial(const T& c, int d1, int d2, char v1 = 'v', char v2 = 'z')
    {
        LaurentPoly2 p;
        p.v1_ = v1;
        p.v2_ = v2;
        if (c != T(0))
            p.m_[{d1, d2}] = c;
        return p;
    }

    bool is_zero() const { return m_.empty(); }
    char var1() const { return v1_; }
    char var2() const { return v2_; }
    LaurentPoly2& set_vars(char a, char b) { v1_ = a; v2_ = b; return *this; }
    const std::map<Key, T>& terms() const { return m_; }

    void add_term(int d1, int d2, const T& c)
    {
        if (c == T(0))
            return;
        auto it = m_.find({d1, d2});
        if (it == m_.end()) {
            m_.emplace(Key{d1, d2}, c);
            return;
        }
        it->second = add_ck(it->second, c);
        if (it->second == T(0))
            m_.erase(it);
    }

    T coeff(int d1, int d2) const
    {
        auto it = m_.find({d1, d2});
        return it == m_.end() ? T(0) : it->second;
    }

    // doubled degree bounds
    int dmin1() const { need(); int r = m_.begin()->first.first; for (auto& [k, c] : m_) r = std::min(r, k.first); return r; }
    int dmax1() const { need(); int r = m_.begin()->first.first; for (auto& [k, c] : m_) r = std::max(r, k.first); return r; }
    int dmin2() const { need(); int r = m_.begin()->first.second; for (auto& [k, c] : m_) r = std::min(r, k.second); return r; }
    int dmax2() const { need(); int r = m_.begin()->first.second; for (auto& [k, c] : m_) r = std::max(r, k.second); return r; }

    // [X]_{var1^(d/2)} as a polynomial in var2
    LaurentPoly<T> coeff1(int d1) const
    {
        LaurentPoly<T> r;
        r.set_var(v2_);
        for (auto& [k, c] : m_)
            if (k.first == d1)
                r.add_term(k.second, c);
        return r;
    }
    LaurentPoly<T> coeff2(int d2) const
    {
        LaurentPoly<T> r;
        r.set_var(v1_);
        for (auto& [k, c] : m_)
            if (k.second == d2)
                r.add_term(k.first, c);
        return r;
    }

    LaurentPoly2 shifted(int d1, int d2) const
    {
        LaurentPoly2 r;
        r.v1_ = v1_;
        r.v2_ = v2_;
        for (auto& [k, c] : m_)
            r.m_.emplace(Key{k.first + d1, k.second + d2}, c);
        return r;
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o)
    {
        adopt(o);
        for (auto& [k, c] : o.m_)
            add_term(k.first, k.second, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o)
    {
        adopt(o);
        for (auto& [k, c] : o.m_)
            add_term(k.first, k.second, T(0) - c);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator-(const LaurentPoly2& a)
    {
        LaurentPoly2 r = a;
        for (auto& [k, c] : r.m_)
            c = T(0) - c;
        return r;
    }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b)
    {
        LaurentPoly2 r;
        const LaurentPoly2& src = a.is_const() ? b : a;
        r.v1_ = src.v1_;
        r.v2_ = src.v2_;
        for (auto& [ka, ca] : a.m_)
            for (auto& [kb, cb] : b.m_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, mul_ck(ca, cb));
        return r;
    }
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

    LaurentPoly2 pow(int k) const
    {
        LaurentPoly2 r(T(1));
        r.v1_ = v1_;
        r.v2_ = v2_;
        for (int i = 0; i < k; ++i)
            r *= *this;
        return r;
    }

    // s1, s2 are the square roots of the variable values
    std::complex<double> eval_half(std::complex<double> s1, std::complex<double> s2) const
    {
        std::complex<double> acc = 0.0;
        for (auto& [k, c] : m_)
            acc += to_complex(c) * std::pow(s1, k.first) * std::pow(s2, k.second);
        return acc;
    }

    bool is_const() const { return m_.empty() || (m_.size() == 1 && m_.begin()->first == Key{0, 0}); }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p)
    {
        if (p.m_.empty())
            return os << "0";
        bool first = true;
        for (auto& [k, c] : p.m_) {
            os << (first ? "" : " + ") << c << '*' << p.v1_ << "^(" << k.first << "/2)" << p.v2_ << "^(" << k.second << "/2)";
            first = false;
        }
        return os;
    }

private:
    void need() const
    {
        if (m_.empty())
            throw std::domain_error("degree of the zero polynomial");
    }
    void adopt(const LaurentPoly2& o)
    {
        if (is_const()) {
            v1_ = o.v1_;
            v2_ = o.v2_;
        }
    }

    std::map<Key, T> m_;
    char v1_ = 'v';
    char v2_ = 'z';
};

using Poly2 = LaurentPoly2<Int>;

} // namespace bf
