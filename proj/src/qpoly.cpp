#include "braidforge/qpoly.hpp"

#include "braidforge/burau.hpp"
#include "braidforge/polyring.hpp"

#include <stdexcept>

namespace bf {

GaussDiagram gauss_diagram(const BraidWord& w, int component)
{
    ClosureData cd = closure_data(w);
    if (component < 0 || component >= cd.components)
        throw std::invalid_argument("no such closure component");
    int start = 0;
    while (cd.component_of_strand[size_t(start)] != component)
        ++start;

    // walk the component; each visit is (crossing, over?)
    std::vector<std::pair<int, bool>> visits;
    int pos = start;
    do {
        for (size_t k = 0; k < w.letters.size(); ++k) {
            int g = w.letters[k];
            int i = std::abs(g) - 1;
            if (pos != i && pos != i + 1)
                continue;
            bool left = pos == i;
            // positive letter: the strand entering on the left passes over
            visits.push_back({int(k), left == (g > 0)});
            pos = left ? i + 1 : i;
        }
    } while (pos != start);

    std::vector<int> seen(w.letters.size(), 0);
    for (auto& v : visits)
        ++seen[size_t(v.first)];
    GaussDiagram gd;
    std::vector<int> chord_of(w.letters.size(), -1);
    int at = 0;
    for (auto& [k, over] : visits) {
        if (seen[size_t(k)] != 2)
            continue;
        if (chord_of[size_t(k)] < 0) {
            chord_of[size_t(k)] = int(gd.chords.size());
            gd.chords.push_back({-1, -1, w.letters[size_t(k)] > 0 ? 1 : -1});
        }
        GaussChord& c = gd.chords[size_t(chord_of[size_t(k)])];
        (over ? c.over : c.under) = at++;
    }
    gd.length = at;
    return gd;
}

Int casson_v2(const GaussDiagram& g)
{
    Int sum = 0;
    const size_t m = g.chords.size();
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            const GaussChord &p = g.chords[a], &q = g.chords[b];
            int p1 = std::min(p.over, p.under), p2 = std::max(p.over, p.under);
            int q1 = std::min(q.over, q.under), q2 = std::max(q.over, q.under);
            bool interleaved = (p1 < q1 && q1 < p2 && p2 < q2) || (q1 < p1 && p1 < q2 && q2 < p2);
            // arrows run from over to under
            if (interleaved && (p.over < p.under) != (q.over < q.under))
                sum += p.sign * q.sign;
        }
    if (sum % 2)
        throw std::logic_error("odd Polyak-Viro count");
    return sum / 2;
}

Int casson_v2(const BraidWord& w)
{
    if (components(w) != 1)
        throw std::invalid_argument("casson_v2 needs a knot closure");
    return casson_v2(gauss_diagram(w, 0));
}

namespace {

// V at t^(1/2) = i w^m, as a polynomial in w
GPoly jones_at(const Poly& V, int m)
{
    GPoly r;
    r.set_var('w');
    V.for_each([&](int d, const Int& c) { r.add_term(2 * m * d, Gauss(c) * ipow(d)); });
    return r;
}

GPoly wpow(int k) { return GPoly::power(k, 'w'); }

} // namespace

// u = sqrt(-t) = w^2, x = u + 1/u; the second chi is taken at the point whose u is w
Poly murakami_q_from_jones(const Poly& V, int e)
{
    const GPoly x = wpow(2) + wpow(-2);
    const GPoly ie(ipow(e));
    GPoly chi = ie * wpow(-4 * e) * jones_at(V, 2) + wpow(-2 * e) * (wpow(4) + wpow(-4));
    GPoly chi2 = ie * wpow(-2 * e) * jones_at(V, 1) + wpow(-e) * x;
    GPoly x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    GPoly den = x2 * (x2 - GPoly(3));
    GPoly num = den * (chi2 * chi2 - GPoly(1)) + GPoly(2) * (x2 + x - GPoly(1)) * (wpow(2 * e) + wpow(-2 * e)) +
                (GPoly(-1) * x4 - GPoly(2) * x3 + GPoly(3) * x2 + GPoly(4) * x - GPoly(4)) * chi;

    Poly in_u;
    in_u.set_var('u');
    num.for_each([&](int d, const Gauss& c) {
        if (c.im != 0 || d % 4 != 0)
            throw std::domain_error("Q numerator is not an integral polynomial in u");
        in_u.add_term(d / 2, c.re);
    });
    Poly xnum = to_symmetric_basis(in_u, 'x');
    Poly xden = Poly::power(4, 'x') - Poly(3) * Poly::power(2, 'x');
    Poly q = exact_divide(xnum, xden);
    q.set_var('x');
    return q;
}

Poly murakami_q(const BraidWord& w)
{
    if (w.strands != 3)
        throw std::invalid_argument("murakami_q needs a 3-braid");
    return murakami_q_from_jones(jones3(w), exponent_sum(w));
}

Rational kanenobu_rhs(const BraidWord& w)
{
    ClosureData cd = closure_data(w);
    const int n = cd.components;
    Int v2 = 0, lk2 = 0;
    for (int c = 0; c < n; ++c)
        v2 += casson_v2(gauss_diagram(w, c));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            lk2 += Int(cd.lk(i, j)) * cd.lk(i, j);
    auto m2pow = [](int k) {
        Rational r = 1;
        for (int i = 0; i < std::abs(k); ++i)
            r *= Rational(-2);
        return k < 0 ? Rational(1) / r : r;
    };
    return Rational(3 * v2) * m2pow(n) + Rational(3 * lk2) * m2pow(n - 2) + Rational(n - 1) * m2pow(n - 3);
}

Rational kanenobu_residual(const BraidWord& w)
{
    return derivative_at(murakami_q(w), -2) - kanenobu_rhs(w);
}

} // namespace bf
