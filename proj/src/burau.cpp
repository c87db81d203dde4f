#include "braidforge/burau.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bf {

Poly neg_sqrt_pow(int k, char var)
{
    return Poly::monomial((k % 2) ? -1 : 1, k, var);
}

LaurentMatrix burau_generator(int n, int g, char var)
{
    const int d = n - 1;
    LaurentMatrix m = LaurentMatrix::Identity(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m(r, c).set_var(var);
    int i = std::abs(g) - 1; // 0-based row of the middle entry
    Poly t = Poly::power(1, var), ti = Poly::power(-1, var);
    if (g > 0) {
        if (i - 1 >= 0)
            m(i, i - 1) = t;
        m(i, i) = -t;
        if (i + 1 < d)
            m(i, i + 1) = Poly(1);
    } else {
        if (i - 1 >= 0)
            m(i, i - 1) = Poly(1);
        m(i, i) = -ti;
        if (i + 1 < d)
            m(i, i + 1) = ti;
    }
    return m;
}

LaurentMatrix lmat_mul(const LaurentMatrix& a, const LaurentMatrix& b)
{
    LaurentMatrix r(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Poly s;
            for (Eigen::Index k = 0; k < a.cols(); ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero())
                    s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

LaurentMatrix reduced_burau_naive(const BraidWord& w, char var)
{
    const int d = w.strands - 1;
    LaurentMatrix m = LaurentMatrix::Identity(d, d);
    for (int g : w.letters)
        m = lmat_mul(m, burau_generator(w.strands, g, var));
    return m;
}

LaurentMatrix reduced_burau(const BraidWord& w, char var)
{
    const int d = w.strands - 1;
    LaurentMatrix m = LaurentMatrix::Identity(d, d);
    Poly t = Poly::power(1, var), ti = Poly::power(-1, var);
    // right multiplication by a generator only touches columns i-1, i, i+1
    for (int g : w.letters) {
        int i = std::abs(g) - 1;
        for (int r = 0; r < d; ++r) {
            Poly ci = m(r, i);
            if (ci.is_zero())
                continue;
            if (g > 0) {
                if (i - 1 >= 0)
                    m(r, i - 1) += t * ci;
                if (i + 1 < d)
                    m(r, i + 1) += ci;
                m(r, i) = -(t * ci);
            } else {
                if (i - 1 >= 0)
                    m(r, i - 1) += ci;
                if (i + 1 < d)
                    m(r, i + 1) += ti * ci;
                m(r, i) = -(ti * ci);
            }
        }
    }
    return m;
}

Poly minor_det(const LaurentMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    const int k = int(rows.size());
    if (k == 0)
        return Poly(1);
    // expansion along rows, memoized on the set of used columns
    std::vector<Poly> memo(size_t(1) << k);
    std::vector<char> have(size_t(1) << k, 0);
    std::function<Poly(int, unsigned)> rec = [&](int r, unsigned used) -> Poly {
        if (r == k)
            return Poly(1);
        if (have[used])
            return memo[used];
        Poly s;
        int sign = 1;
        for (int c = 0; c < k; ++c) {
            if (used & (1u << c))
                continue;
            const Poly& e = m(rows[size_t(r)], cols[size_t(c)]);
            if (!e.is_zero()) {
                Poly sub = rec(r + 1, used | (1u << c));
                if (!sub.is_zero())
                    s += sign > 0 ? e * sub : -(e * sub);
            }
            sign = -sign;
        }
        have[used] = 1;
        return memo[used] = s;
    };
    return rec(0, 0);
}

Poly lmat_det(const LaurentMatrix& m)
{
    std::vector<int> idx(size_t(m.rows()));
    for (int i = 0; i < int(m.rows()); ++i)
        idx[size_t(i)] = i;
    return minor_det(m, idx, idx);
}

Poly lmat_trace(const LaurentMatrix& m)
{
    Poly s;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        s += m(i, i);
    return s;
}

namespace {

void subsets(int n, int j, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (int(cur.size()) == j) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, j, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(int n, int j)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets(n, j, 0, cur, out);
    return out;
}

} // namespace

LaurentMatrix exterior_power(const LaurentMatrix& m, int j)
{
    if (j < 0 || j > m.rows())
        throw std::invalid_argument("exterior power degree out of range");
    auto ss = all_subsets(int(m.rows()), j);
    LaurentMatrix r(Eigen::Index(ss.size()), Eigen::Index(ss.size()));
    for (size_t a = 0; a < ss.size(); ++a)
        for (size_t b = 0; b < ss.size(); ++b)
            r(Eigen::Index(a), Eigen::Index(b)) = minor_det(m, ss[a], ss[b]);
    return r;
}

Poly trace_exterior(const LaurentMatrix& m, int j)
{
    Poly s;
    for (auto& I : all_subsets(int(m.rows()), j))
        s += minor_det(m, I, I);
    return s;
}

std::vector<Poly> char_poly(const LaurentMatrix& m)
{
    const int d = int(m.rows());
    std::vector<Poly> c(size_t(d) + 1);
    // det(lambda - M) = sum_j (-1)^j e_j lambda^(d-j)
    for (int j = 0; j <= d; ++j) {
        Poly e = trace_exterior(m, j);
        c[size_t(d - j)] = (j % 2) ? -e : e;
    }
    return c;
}

Poly alexander(const BraidWord& w)
{
    const int n = w.strands;
    if (n == 1)
        return Poly(1);
    LaurentMatrix m = reduced_burau(w);
    LaurentMatrix a = LaurentMatrix::Identity(n - 1, n - 1) - m;
    Poly det = lmat_det(a);
    if (det.is_zero())
        return Poly();
    Poly qn;
    for (int i = 0; i < n; ++i)
        qn += Poly::power(i);
    Poly d = exact_divide(det, qn);
    return neg_sqrt_pow(-(exponent_sum(w) - (n - 1))) * d;
}

Poly jones3(const BraidWord& w)
{
    if (w.strands != 3)
        throw std::invalid_argument("jones3 needs a 3-braid");
    Poly tr = lmat_trace(reduced_burau(w));
    Poly t = Poly::power(1);
    return neg_sqrt_pow(exponent_sum(w) - 2) * (t * tr + Poly(1) + Poly::power(2));
}

BraidWord bar_hom(const BraidWord& w)
{
    if (w.strands != 4)
        throw std::invalid_argument("bar homomorphism needs a 4-braid");
    std::vector<int> l;
    for (int g : w.letters)
        l.push_back(std::abs(g) == 3 ? (g > 0 ? 1 : -1) : g);
    return free_reduce(BraidWord(3, l));
}

Poly jones4(const BraidWord& w)
{
    if (w.strands != 4)
        throw std::invalid_argument("jones4 needs a 4-braid");
    Poly tr3 = lmat_trace(reduced_burau(w));
    std::vector<int> l;
    for (int g : w.letters)
        l.push_back(std::abs(g) == 3 ? (g > 0 ? 1 : -1) : g);
    Poly tr2 = lmat_trace(reduced_burau(BraidWord(3, l)));
    Poly t = Poly::power(1), one(1);
    Poly num = t * (one - Poly::power(3)) * (one + t) * tr3 + Poly::power(2) * (one - Poly::power(2)) * tr2 +
               (one - Poly::power(5)) * (one + t);
    Poly den = (one - Poly::power(2)) * (one + t);
    return neg_sqrt_pow(exponent_sum(w) - 3) * exact_divide(num, den);
}

Poly jones_burau(const BraidWord& w)
{
    if (w.strands == 1)
        return Poly(1);
    if (w.strands == 2) {
        std::vector<int> l = w.letters;
        l.push_back(2);
        return jones3(BraidWord(3, l));
    }
    if (w.strands == 3)
        return jones3(w);
    if (w.strands == 4)
        return jones4(w);
    throw std::invalid_argument("Jones trace formula only for at most 4 strands");
}

BraidWord family_ln_word(int n)
{
    std::vector<int> l;
    for (int i = 0; i < n; ++i) {
        l.push_back(1);
        l.push_back(-2);
    }
    return BraidWord(3, l);
}

FamilyLn family_ln(int n)
{
    if (n < 1)
        throw std::invalid_argument("family index must be positive");
    Poly t = Poly::power(1), ti = Poly::power(-1);
    Poly s = -(t + ti - Poly(1));
    Poly p0(2), p1 = s;
    for (int k = 2; k <= n; ++k) {
        Poly p2 = s * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    FamilyLn f;
    f.V = t + ti + p1;
    f.Delta = exact_divide(Poly(2) - p1, t + Poly(1) + ti);
    return f;
}

std::pair<std::complex<double>, std::complex<double>> family_ln_numeric(int n, std::complex<double> t)
{
    std::complex<double> s = -(t + 1.0 / t - 1.0);
    std::complex<double> disc = std::sqrt(s * s - 4.0);
    std::complex<double> ep = (s + disc) / 2.0, em = (s - disc) / 2.0;
    std::complex<double> pn = std::pow(ep, n) + std::pow(em, n);
    return {t + 1.0 / t + pn, (2.0 - pn) / (t + 1.0 + 1.0 / t)};
}

std::complex<double> eval_matrix_entry(const Poly& p, std::complex<double> s) { return p.eval_half(s); }

Eigen::MatrixXcd evaluate(const LaurentMatrix& m, std::complex<double> s)
{
    Eigen::MatrixXcd r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).eval_half(s);
    return r;
}

} // namespace bf
