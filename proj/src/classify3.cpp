#include "braidforge/classify3.hpp"

#include "braidforge/burau.hpp"
#include "braidforge/hecke.hpp"
#include "braidforge/parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bf {

namespace {

void require_nonsplit(const BraidWord& w)
{
    if (w.strands != 3)
        throw std::invalid_argument("expected a 3-braid");
    bool g1 = false, g2 = false;
    for (int l : w.letters)
        (std::abs(l) == 1 ? g1 : g2) = true;
    if (!g1 || !g2)
        throw std::invalid_argument("split closure: a generator is missing");
}

// cyclic syllables of a positive band word: (count, count with exponent > 1)
std::pair<int, int> cyclic_syllables(const std::vector<int>& r)
{
    if (r.empty())
        return {0, 0};
    std::vector<int> lens;
    for (size_t i = 0; i < r.size(); ++i) {
        if (i > 0 && r[i] == r[i - 1])
            ++lens.back();
        else
            lens.push_back(1);
    }
    if (lens.size() > 1 && r.front() == r.back()) {
        lens.front() += lens.back();
        lens.pop_back();
    }
    int nontriv = 0;
    for (int l : lens)
        nontriv += l > 1;
    return {int(lens.size()), nontriv};
}

bool single_index(const XuForm& f)
{
    if (f.kind == 'B' || f.k > 0 || f.R.empty())
        return false;
    return std::all_of(f.R.begin(), f.R.end(), [&](int a) { return a == f.R.front(); });
}

std::vector<std::vector<int>> nondecreasing(int m, int start)
{
    std::vector<std::vector<int>> out;
    if (m <= 0)
        return {{}};
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> s{start};
        for (int i = 0; i < m - 1; ++i)
            s.push_back((mask >> i) & 1 ? s.back() % 3 + 1 : s.back());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<int> flip(const std::vector<int>& ls)
{
    std::vector<int> r;
    for (int l : ls) {
        int a = std::abs(l);
        int f = a == 3 ? 3 : 3 - a;
        r.push_back(l > 0 ? -f : f);
    }
    return r;
}

size_t shape_count(int len)
{
    size_t n = 0;
    for (int k = 0; 2 * k <= len; ++k) {
        int m = len - 2 * k;
        n += m == 0 ? 2 : size_t(1) << m;
    }
    return n + size_t(3) * size_t(len - 1) * (size_t(1) << (len - 2));
}

} // namespace

AlexProfile alexander_profile(const BraidWord& w)
{
    require_nonsplit(w);
    XuForm f = xu_normal_form(w);
    int chi = 3 - f.band_length;
    AlexProfile p;
    if (f.kind == 'B') {
        p.dmax = 1 - chi;
        p.maxcf = 1;
        p.reason = "not strongly quasi-signed";
        return p;
    }
    int c = components(w);
    int s = (f.negative && c == 2) ? -1 : 1;
    p.sign_known = true;
    if (f.k > 0) {
        p.dmax = 1 - chi;
        p.maxcf = s;
        p.reason = "strongly quasi-signed, fibered";
        return p;
    }
    auto [syl, nontriv] = cyclic_syllables(f.R);
    if (syl % 3 != 0)
        throw std::logic_error("inf-0 form does not wrap around the indices");
    int j = syl / 3;
    if (j % 2) {
        p.dmax = 1 - chi;
        p.maxcf = 2 * s;
        p.reason = "reduces to an odd power of [123]";
    } else if (nontriv == 0) {
        p.zero = true;
        p.reason = "even power of [123]";
    } else {
        p.dmax = -1 - chi;
        p.maxcf = s * nontriv;
        p.reason = "reduces to an even power of [123]";
    }
    return p;
}

JonesProfile jones_profile(const BraidWord& w)
{
    require_nonsplit(w);
    XuForm f = xu_normal_form(w);
    int chi = 3 - f.band_length;
    JonesProfile p;
    if (f.kind == 'A') {
        bool fib = f.k > 0;
        p.hh_case = fib ? 2 : 1;
        if (!f.negative) {
            p.dmin = 1 - chi;
            p.mincf_abs = 1;
            if (!fib) {
                p.span_eq = 2 * (4 - chi);
                p.maxcf_abs = 1;
                p.dmax = *p.dmin + *p.span_eq;
            }
            p.reason = fib ? "strongly quasi-positive, fibered" : "strongly quasi-positive, not fibered";
        } else {
            p.dmax = chi - 1;
            p.maxcf_abs = 1;
            if (!fib) {
                p.span_eq = 2 * (4 - chi);
                p.mincf_abs = 1;
                p.dmin = *p.dmax - *p.span_eq;
            }
            p.reason = fib ? "strongly quasi-negative, fibered" : "strongly quasi-negative, not fibered";
        }
        if (fib)
            p.span_le = 2 * (3 - chi);
        return p;
    }
    int m = int(f.L.size()), r = int(f.R.size());
    int e = exponent_sum(w);
    if (m == 1 && r == 1) {
        p.hh_case = 0;
        p.dmin = p.dmax = 0;
        p.mincf_abs = p.maxcf_abs = 1;
        p.reason = "the unknot";
        return p;
    }
    if (m >= 2 && r >= 2) {
        p.hh_case = 3;
        p.mincf_abs = p.maxcf_abs = 1;
        p.span_eq = 2 * (3 - chi);
        p.dmax = 2 * e + (1 - chi) + 2;
        p.dmin = 2 * e - (1 - chi) - 2;
        p.reason = "not strongly quasi-signed, |e| < 1 - chi";
        return p;
    }
    p.hh_case = 4;
    if (m == 1) {
        p.maxcf_abs = 1;
        p.dmax = 5 - 3 * chi;
        p.dmin_ge = -1 - chi;
        p.mincf2_at_bound = true;
        p.reason = "one negative band";
    } else {
        p.mincf_abs = 1;
        p.dmin = -(5 - 3 * chi);
        p.dmax_le = 1 + chi;
        p.maxcf2_at_bound = true;
        p.reason = "one positive band";
    }
    return p;
}

Verdict exclusion_certificate(const Poly& poly, PolyKind kind, int c)
{
    Verdict v;
    auto keep = [&](std::vector<int> cands, auto&& extra) {
        std::sort(cands.begin(), cands.end(), std::greater<>());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (int chi : cands)
            if (chi <= 1 && ((chi - c) % 2 == 0) && extra(chi))
                v.chi_candidates.push_back(chi);
    };
    if (kind == PolyKind::Alexander) {
        if (poly.is_zero()) {
            if (c == 1) {
                v.excluded = true;
                v.reason = "a knot has non-zero Alexander polynomial";
            } else {
                v.reason = c == 3 ? "split, or an even power of [123]" : "split links only";
            }
            return v;
        }
        Int cf = poly.max_cf();
        int dmax = poly.dmax();
        Int acf = cf < 0 ? -cf : cf;
        if (cf <= -2 && (c == 1 || c == 3)) {
            v.excluded = true;
            v.reason = "leading coefficient <= -2 for a knot or 3-component link";
            return v;
        }
        int slack = c == 1 ? 2 : 4; // |max cf| <= max deg + 1 (knots), + 2 (links), doubled
        if (2 * acf > dmax + slack) {
            v.excluded = true;
            v.reason = "leading coefficient exceeds the degree bound";
            return v;
        }
        std::vector<int> cands;
        if (acf <= 2)
            cands.push_back(1 - dmax);
        cands.push_back(-1 - dmax);
        keep(cands, [](int) { return true; });
    } else {
        if (poly.is_zero()) {
            v.excluded = true;
            v.reason = "zero Jones polynomial";
            return v;
        }
        int lo = poly.dmin(), hi = poly.dmax(), span = hi - lo;
        std::vector<int> cands{1 - lo, 1 + hi};
        if (span % 2 == 0) {
            cands.push_back(3 - span / 2);
            cands.push_back(4 - span / 2);
        }
        if ((5 - hi) % 3 == 0)
            cands.push_back((5 - hi) / 3);
        if ((5 + lo) % 3 == 0)
            cands.push_back((5 + lo) / 3);
        keep(cands, [&](int chi) { return span <= 2 * (4 - chi); });
    }
    if (v.chi_candidates.empty()) {
        v.excluded = true;
        v.reason = "no admissible Euler characteristic";
    } else {
        v.reason = "candidate Euler characteristics";
    }
    return v;
}

std::vector<BandWord> enumerate_xu_shapes(int len)
{
    std::vector<BandWord> out;
    if (len <= 0)
        return out;
    for (int k = 0; 2 * k <= len; ++k) {
        std::vector<int> head;
        for (int i = 0; i < k; ++i)
            head.insert(head.end(), {2, 1});
        for (auto& r : nondecreasing(len - 2 * k, 1)) {
            std::vector<int> w = head;
            w.insert(w.end(), r.begin(), r.end());
            out.push_back(BandWord{w});
            out.push_back(BandWord{flip(w)});
        }
    }
    for (int m = 1; m < len; ++m)
        for (auto& l : nondecreasing(m, 1))
            for (int s = 1; s <= 3; ++s)
                for (auto& r : nondecreasing(len - m, s)) {
                    std::vector<int> w;
                    for (auto it = l.rbegin(); it != l.rend(); ++it)
                        w.push_back(-*it);
                    w.insert(w.end(), r.begin(), r.end());
                    out.push_back(BandWord{w});
                }
    return out;
}

SearchResult search_3braids_by_polynomial(const Poly& target, PolyKind kind, int components_wanted,
                                          size_t budget)
{
    if (kind == PolyKind::Alexander && target.is_zero())
        throw std::invalid_argument("search needs a non-zero Alexander polynomial");
    SearchResult res;
    std::vector<int> comps;
    if (components_wanted > 0)
        comps = {components_wanted};
    else
        comps = {1, 2, 3};
    std::vector<int> chis;
    for (int c : comps) {
        auto v = exclusion_certificate(target, kind, c);
        chis.insert(chis.end(), v.chi_candidates.begin(), v.chi_candidates.end());
    }
    std::sort(chis.begin(), chis.end(), std::greater<>());
    chis.erase(std::unique(chis.begin(), chis.end()), chis.end());
    res.chi_searched = chis;

    std::vector<BandWord> shapes;
    size_t need = 0;
    for (int chi : chis) {
        int len = 3 - chi;
        if (len < 2)
            continue;
        if (len > 40)
            throw std::runtime_error("search budget exceeded: band length " + std::to_string(len));
        need += shape_count(len);
    }
    if (need > budget)
        throw std::runtime_error("search budget exceeded: " + std::to_string(need) + " shapes needed, budget " +
                                 std::to_string(budget));
    for (int chi : chis) {
        if (3 - chi < 2)
            continue;
        auto s = enumerate_xu_shapes(3 - chi);
        shapes.insert(shapes.end(), s.begin(), s.end());
    }
    res.enumerated = shapes.size();

    std::map<std::string, XuForm> found;
    std::mutex mu;
    parallel_for(shapes.size(), [&](size_t i) {
        BraidWord w = band_to_artin(shapes[i]);
        if (components_wanted > 0 && components(w) != components_wanted)
            return;
        Poly p = kind == PolyKind::Alexander ? alexander(w) : jones3(w);
        if (!(p == target))
            return;
        XuForm f = xu_normal_form(w);
        if (f.band_length < 2 || single_index(f))
            return;
        std::lock_guard lk(mu);
        found.emplace(to_string(f), f);
    });
    for (auto& [k, f] : found)
        res.forms.push_back(f);
    return res;
}

Poly2 p_from_jones3(const Poly& V, int e)
{
    // V = (-sqrt t)^(e-2) (t tr + 1 + t^2)
    Poly pw = Poly::monomial(e % 2 ? -1 : 1, -(e - 2));
    Poly rest = pw * V - Poly(1) - Poly::power(2);
    Poly tr = (rest * Poly::power(-1)).set_var('q');
    if (!tr.is_integral())
        throw std::domain_error("V is not the Jones polynomial of a 3-braid with this exponent sum");
    Int sg = e % 2 ? -1 : 1;
    std::vector<Poly> N(3);
    for (auto& we : weight_table(3)) {
        Poly t;
        if (we.Y.parts == std::vector<int>{1, 1, 1})
            t = Poly(sg);
        else if (we.Y.parts == std::vector<int>{2, 1})
            t = Poly(sg) * tr;
        else
            t = Poly::power(e, 'q');
        for (size_t j = 0; j < we.W.size(); ++j)
            N[j] += we.W[j] * t;
    }
    return x_to_p(3, e, N, hecke_denominator(3));
}

} // namespace bf
