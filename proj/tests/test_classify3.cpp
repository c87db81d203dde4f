#include "braidforge/burau.hpp"
#include "braidforge/classify3.hpp"
#include "braidforge/hecke.hpp"
#include "braidforge/polyring.hpp"

#include <doctest.h>

#include <functional>

#include <map>
#include <random>
#include <set>

using namespace bf;

namespace {

bool nonsplit(const BraidWord& w)
{
    bool g1 = false, g2 = false;
    for (int l : w.letters)
        (std::abs(l) == 1 ? g1 : g2) = true;
    return g1 && g2;
}

BraidWord bands(std::vector<int> unit, int k, std::vector<int> tail = {})
{
    std::vector<int> b;
    for (int i = 0; i < k; ++i)
        b.insert(b.end(), unit.begin(), unit.end());
    b.insert(b.end(), tail.begin(), tail.end());
    return band_to_artin(BandWord{b});
}

// one representative per conjugacy class for all non-split closures up to the given band length
std::vector<BraidWord> class_reps(int maxlen)
{
    std::map<std::string, BraidWord> reps;
    for (int len = 2; len <= maxlen; ++len)
        for (auto& b : enumerate_xu_shapes(len)) {
            auto w = band_to_artin(b);
            auto f = xu_normal_form(w);
            if (f.band_length != len || !nonsplit(free_reduce(band_to_artin(f.band_word()))))
                continue;
            reps.emplace(to_string(f), band_to_artin(f.band_word()));
        }
    std::vector<BraidWord> out;
    for (auto& [k, w] : reps)
        out.push_back(w);
    return out;
}

// all Artin words in B3 up to the given length, brute force
void all_words(int maxlen, const std::function<void(const BraidWord&)>& f)
{
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        f(BraidWord(3, cur));
        if (int(cur.size()) == maxlen)
            return;
        for (int l : {1, -1, 2, -2}) {
            if (!cur.empty() && cur.back() == -l)
                continue;
            cur.push_back(l);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

Poly t(int e) { return Poly::power(e); }

} // namespace

TEST_CASE("Alexander profiles of the examples")
{
    auto z = alexander_profile(bands({1, 2, 3}, 2));
    CHECK(z.zero);
    CHECK(alexander(bands({1, 2, 3}, 2)).is_zero());

    auto w3 = bands({1, 2, 3}, 3);
    auto p3 = alexander_profile(w3);
    int chi3 = euler_char(w3).chi;
    CHECK(p3.maxcf == 2);
    CHECK(p3.dmax == 1 - chi3);
    CHECK(alexander(w3).max_cf() == 2);
    CHECK(alexander(w3).dmax() == 1 - chi3);

    // (123)^2 with two syllables made non-trivial
    auto w = band_to_artin(BandWord{{1, 1, 2, 3, 1, 2, 2, 3}});
    auto p = alexander_profile(w);
    int chi = euler_char(w).chi;
    CHECK(p.maxcf == 2);
    CHECK(p.dmax == -1 - chi);
    CHECK(alexander(w).max_cf() == 2);
    CHECK(alexander(w).dmax() == -1 - chi);

    CHECK_THROWS_AS(alexander_profile(BraidWord(3, {1, 1, 1})), std::invalid_argument);
}

TEST_CASE("profiles match computed polynomials on every class up to band length 9")
{
    auto reps = class_reps(9);
    CHECK(reps.size() > 100);
    int zero = 0, sq = 0, c3 = 0, c4 = 0;
    for (auto& w : reps) {
        Poly D = alexander(w);
        auto a = alexander_profile(w);
        INFO(to_string(w));
        if (a.zero) {
            CHECK(D.is_zero());
            ++zero;
        } else {
            REQUIRE(!D.is_zero());
            CHECK(D.dmax() == a.dmax);
            if (a.sign_known)
                CHECK(D.max_cf() == a.maxcf);
            else
                CHECK(std::abs(D.max_cf()) == a.maxcf);
        }

        Poly V = jones3(w);
        auto j = jones_profile(w);
        if (j.dmin)
            CHECK(V.dmin() == *j.dmin);
        if (j.dmax)
            CHECK(V.dmax() == *j.dmax);
        if (j.dmin_ge)
            CHECK(V.dmin() >= *j.dmin_ge);
        if (j.dmax_le)
            CHECK(V.dmax() <= *j.dmax_le);
        if (j.span_eq)
            CHECK(V.dmax() - V.dmin() == *j.span_eq);
        if (j.span_le)
            CHECK(V.dmax() - V.dmin() <= *j.span_le);
        if (j.mincf_abs)
            CHECK(std::abs(V.min_cf()) == *j.mincf_abs);
        if (j.maxcf_abs)
            CHECK(std::abs(V.max_cf()) == *j.maxcf_abs);
        if (j.mincf2_at_bound && V.dmin() == *j.dmin_ge)
            CHECK(std::abs(V.min_cf()) == 2);
        if (j.maxcf2_at_bound && V.dmax() == *j.dmax_le)
            CHECK(std::abs(V.max_cf()) == 2);
        int chi = euler_char(w).chi;
        CHECK(V.dmax() - V.dmin() <= 2 * (4 - chi));
        sq += j.hh_case <= 2;
        c3 += j.hh_case == 3;
        c4 += j.hh_case == 4;

        // the exclusion certificates never rule out a real closure
        int c = components(w);
        auto va = exclusion_certificate(D, PolyKind::Alexander, c);
        CHECK(!va.excluded);
        if (!D.is_zero())
            CHECK(std::count(va.chi_candidates.begin(), va.chi_candidates.end(), chi) == 1);
        auto vj = exclusion_certificate(V, PolyKind::Jones, c);
        CHECK(!vj.excluded);
        CHECK(std::count(vj.chi_candidates.begin(), vj.chi_candidates.end(), chi) == 1);
    }
    CHECK(zero > 0);
    CHECK(sq > 0);
    CHECK(c3 > 0);
    CHECK(c4 > 0);
}

TEST_CASE("Morton-Franks-Williams bounds and P from V")
{
    auto reps = class_reps(6);
    for (auto& w : reps) {
        Poly2 P = skein4(w);
        int e = exponent_sum(w);
        CHECK(P.dmin1() >= 2 * (e - 2));
        CHECK(P.dmax1() <= 2 * (e + 2));

        // (V, case) give e back, and (V, e) give P
        Poly V = jones3(w);
        auto f = xu_normal_form(w);
        int chi = 3 - f.band_length;
        int ge = 0;
        if (f.kind == 'A')
            ge = f.negative ? chi - 3 : 3 - chi;
        else if (f.L.size() == 1 && f.R.size() == 1)
            ge = 0;
        else if (f.L.size() == 1)
            ge = 1 - chi;
        else if (f.R.size() == 1)
            ge = chi - 1;
        else
            ge = (V.dmax() - (1 - chi) - 2) / 2;
        CHECK(ge == e);
        CHECK(p_from_jones3(V, ge) == P);
    }
}

TEST_CASE("exclusion certificates")
{
    // leading coefficient -2 on a knot
    Poly d = Poly(-2) * t(1) + Poly(5) + Poly(-2) * t(-1);
    auto v = exclusion_certificate(d, PolyKind::Alexander, 1);
    CHECK(v.excluded);
    // |max cf| = 7 at degree 3 on a knot
    Poly big = Poly(7) * (t(3) + t(-3)) + Poly(-13);
    CHECK(exclusion_certificate(big, PolyKind::Alexander, 1).excluded);
    // a 2-component link may carry -2
    CHECK(!exclusion_certificate(Poly::monomial(-2, 1) + Poly::monomial(-2, -1), PolyKind::Alexander, 2).excluded);
    auto one = exclusion_certificate(Poly(1), PolyKind::Alexander, 1);
    CHECK(!one.excluded);
    CHECK(one.chi_candidates == std::vector<int>{1, -1});
    CHECK(exclusion_certificate(Poly(), PolyKind::Alexander, 1).excluded);
    auto vj = exclusion_certificate(Poly(1), PolyKind::Jones, 1);
    CHECK(vj.chi_candidates.front() == 1);
    CHECK(vj.chi_candidates.size() <= 3);
}

TEST_CASE("shape enumeration")
{
    for (int len = 1; len <= 8; ++len) {
        auto s = enumerate_xu_shapes(len);
        std::set<std::vector<int>> u;
        for (auto& b : s)
            u.insert(b.letters);
        CHECK(u.size() == s.size());
    }
}

TEST_CASE("search by Alexander polynomial")
{
    Poly tre = t(1) - Poly(1) + t(-1);
    auto r = search_3braids_by_polynomial(tre, PolyKind::Alexander, 1);
    // s1^3 s2 and s1^3 s2^-1 are different classes with the same closure, plus the mirrors
    REQUIRE(r.forms.size() == 4);
    Poly2 T = skein4(BraidWord(2, {1, 1, 1}));
    Poly2 Tm = skein4(BraidWord(2, {-1, -1, -1}));
    std::set<bool> sides;
    for (auto& f : r.forms) {
        Poly2 P = skein4(band_to_artin(f.band_word()));
        CHECK((P == T || P == Tm));
        sides.insert(P == T);
    }
    CHECK(sides.size() == 2);
    std::set<std::string> want;
    for (auto w : {BraidWord(3, {1, 1, 1, 2}), BraidWord(3, {1, 1, 1, -2})}) {
        want.insert(to_string(xu_normal_form(w)));
        want.insert(to_string(xu_normal_form(mirror(w))));
    }
    std::set<std::string> got;
    for (auto& f : r.forms)
        got.insert(to_string(f));
    CHECK(got == want);

    Poly fig8 = -t(1) + Poly(3) - t(-1);
    auto r8 = search_3braids_by_polynomial(fig8, PolyKind::Alexander, 1);
    REQUIRE(r8.forms.size() == 1);
    CHECK(r8.forms[0] == xu_normal_form(BraidWord(3, {1, -2, 1, -2})));

    // brute force: every Artin word up to length 8 with these polynomials lands in the lists
    std::set<std::string> s3, s8;
    for (auto& f : r.forms)
        s3.insert(to_string(f));
    for (auto& f : r8.forms)
        s8.insert(to_string(f));
    int hits = 0;
    all_words(8, [&](const BraidWord& w) {
        if (!nonsplit(w) || components(w) != 1)
            return;
        Poly D = alexander(w);
        if (D == tre) {
            CHECK(s3.count(to_string(xu_normal_form(w))) == 1);
            ++hits;
        } else if (D == fig8) {
            CHECK(s8.count(to_string(xu_normal_form(w))) == 1);
            ++hits;
        }
    });
    CHECK(hits > 0);

    CHECK_THROWS_AS(search_3braids_by_polynomial(Poly(), PolyKind::Alexander), std::invalid_argument);
    CHECK_THROWS_AS(search_3braids_by_polynomial(tre, PolyKind::Alexander, 1, 10), std::runtime_error);
}

TEST_CASE("search by Jones polynomial")
{
    auto r = search_3braids_by_polynomial(Poly(1), PolyKind::Jones, 1);
    REQUIRE(!r.forms.empty());
    for (auto& f : r.forms)
        CHECK(skein4(band_to_artin(f.band_word())) == Poly2(1));
    CHECK(std::find(r.chi_searched.begin(), r.chi_searched.end(), 1) != r.chi_searched.end());

    // trivial Alexander polynomial on a 3-braid knot also forces the unknot
    auto a = search_3braids_by_polynomial(Poly(1), PolyKind::Alexander, 1);
    for (auto& f : a.forms)
        CHECK(skein4(band_to_artin(f.band_word())) == Poly2(1));
}
