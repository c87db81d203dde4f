#include "braidforge/acceptance.hpp"

#include "braidforge/adequacy.hpp"
#include "braidforge/burau.hpp"
#include "braidforge/classify3.hpp"
#include "braidforge/hecke.hpp"
#include "braidforge/mwf.hpp"
#include "braidforge/parallel.hpp"
#include "braidforge/polyring.hpp"
#include "braidforge/qpoly.hpp"
#include "braidforge/unitarity.hpp"
#include "braidforge/xuform.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

namespace bf {

namespace {

struct Tally {
    std::atomic<long> checked{0}, bad{0};
    std::mutex m;
    std::string first;

    void check(bool ok, const std::string& what)
    {
        ++checked;
        if (ok)
            return;
        ++bad;
        std::lock_guard lk(m);
        if (first.empty())
            first = what;
    }
    bool ok() const { return bad == 0; }
    std::string summary() const
    {
        std::ostringstream os;
        os << checked << " checks, " << bad << " failed";
        if (!first.empty())
            os << " (first: " << first << ")";
        return os.str();
    }
};

// random words with both generators of B3 / all three of B4 present, so closures are non-split
std::vector<BraidWord> sample_words(std::mt19937_64& rng, int strands, int count, int maxlen)
{
    std::vector<BraidWord> out;
    while (int(out.size()) < count) {
        BraidWord w = random_word(rng, strands, 2 + int(rng() % unsigned(maxlen - 1)));
        std::vector<bool> has(size_t(strands), false);
        for (int l : w.letters)
            has[size_t(std::abs(l))] = true;
        if (std::count(has.begin() + 1, has.end(), true) == strands - 1)
            out.push_back(w);
    }
    return out;
}

struct Sample {
    std::vector<BraidWord> b3, b4;
};

const Sample& criterion_sample(std::uint64_t seed)
{
    static std::map<std::uint64_t, Sample> cache;
    static std::mutex m;
    std::lock_guard lk(m);
    auto it = cache.find(seed);
    if (it != cache.end())
        return it->second;
    std::mt19937_64 rng(seed);
    Sample s;
    s.b3 = sample_words(rng, 3, 200, 14);
    s.b4 = sample_words(rng, 4, 100, 14);
    return cache.emplace(seed, std::move(s)).first->second;
}

CriterionResult cross_path(const AcceptanceOptions& opt)
{
    const Sample& s = criterion_sample(opt.seed);
    Tally t;
    std::vector<BraidWord> all = s.b3;
    all.insert(all.end(), s.b4.begin(), s.b4.end());
    parallel_for(all.size(), [&](size_t i) {
        const BraidWord& w = all[i];
        std::string tag = to_string(w);
        Poly V = w.strands == 3 ? jones3(w) : jones4(w);
        t.check(V == bracket_oracle(w), tag + " Jones vs bracket");
        Poly2 P = skein4(w);
        t.check(P == homfly_oracle(w), tag + " skein vs oracle");
        t.check(alexander(w) == substitute_two_to_one(P, SubstRule::Alexander), tag + " Alexander vs skein");
        t.check(V == substitute_two_to_one(P, SubstRule::Jones), tag + " Jones vs skein");
    });
    return {1, "cross-path polynomial equality", t.ok(),
            std::to_string(s.b3.size()) + " 3-braids, " + std::to_string(s.b4.size()) + " 4-braids; " + t.summary()};
}

CriterionResult p21_identity(const AcceptanceOptions& opt)
{
    const Sample& s = criterion_sample(opt.seed);
    std::vector<BraidWord> all = s.b3;
    all.insert(all.end(), s.b4.begin(), s.b4.end());
    std::vector<double> worst(all.size(), 0);
    auto pts = default_p21_samples();
    parallel_for(all.size(), [&](size_t i) { worst[i] = check_p21(skein4(all[i]), pts); });
    double w = *std::max_element(worst.begin(), worst.end());
    std::ostringstream os;
    os << all.size() << " braids x " << pts.size() << " points, max residual " << w;
    return {2, "P(v, 1/v - v) = 1", w < 1e-9, os.str()};
}

CriterionResult mwf_words(const AcceptanceOptions&)
{
    const std::vector<std::pair<std::string, int>> words{{"123122112321", 3},
                                                         {"1231221122321", 4},
                                                         {"12322312232112321", 4},
                                                         {"1232231211123221", 4},
                                                         {"12223223223223121112222321", 3}};
    Tally t;
    std::ostringstream os;
    for (auto& [s, want] : words) {
        BraidWord w = parse_braid("[" + s + "]");
        int r = resolution_mwf(w);
        int k = mwf_bound(w.strands <= 4 ? skein4(w) : homfly_oracle(w, 16));
        t.check(r == want && k == want, s);
        os << s << "->" << r << " ";
    }
    return {3, "MWF of the worked words", t.ok(), os.str() + "; " + t.summary()};
}

bool nonsplit3(const BraidWord& w)
{
    bool g1 = false, g2 = false;
    for (int l : w.letters)
        (std::abs(l) == 1 ? g1 : g2) = true;
    return g1 && g2;
}

CriterionResult classification(const AcceptanceOptions&)
{
    std::map<std::string, std::pair<BraidWord, int>> reps;
    for (int len = 2; len <= 9; ++len)
        for (auto& b : enumerate_xu_shapes(len)) {
            XuForm f = xu_normal_form(band_to_artin(b));
            BraidWord w = free_reduce(band_to_artin(f.band_word()));
            if (f.band_length != len || !nonsplit3(w))
                continue;
            reps.emplace(to_string(f), std::pair{w, len});
        }
    std::vector<std::pair<BraidWord, int>> list;
    for (auto& [k, v] : reps)
        list.push_back(v);

    Tally t;
    std::atomic<int> knots{0};
    parallel_for(list.size(), [&](size_t i) {
        const BraidWord& w = list[i].first;
        std::string tag = to_string(w);
        Poly D = alexander(w), V = jones3(w);
        AlexProfile a = alexander_profile(w);
        if (a.zero) {
            t.check(D.is_zero(), tag + " Alexander zero");
        } else {
            bool ok = !D.is_zero() && D.dmax() == a.dmax &&
                      (a.sign_known ? D.max_cf() == a.maxcf : std::abs(D.max_cf()) == a.maxcf);
            t.check(ok, tag + " Alexander profile");
        }
        JonesProfile j = jones_profile(w);
        bool ok = true;
        if (j.dmin)
            ok &= V.dmin() == *j.dmin;
        if (j.dmax)
            ok &= V.dmax() == *j.dmax;
        if (j.dmin_ge)
            ok &= V.dmin() >= *j.dmin_ge;
        if (j.dmax_le)
            ok &= V.dmax() <= *j.dmax_le;
        if (j.span_eq)
            ok &= V.dmax() - V.dmin() == *j.span_eq;
        if (j.span_le)
            ok &= V.dmax() - V.dmin() <= *j.span_le;
        if (j.mincf_abs)
            ok &= std::abs(V.min_cf()) == *j.mincf_abs;
        if (j.maxcf_abs)
            ok &= std::abs(V.max_cf()) == *j.maxcf_abs;
        if (j.mincf2_at_bound && V.dmin() == *j.dmin_ge)
            ok &= std::abs(V.min_cf()) == 2;
        if (j.maxcf2_at_bound && V.dmax() == *j.dmax_le)
            ok &= std::abs(V.max_cf()) == 2;
        t.check(ok, tag + " Jones profile");
        // the unknot is the only knot of band length 2
        if (components(w) == 1 && list[i].second > 2) {
            ++knots;
            t.check(D != Poly(1) && V != Poly(1), tag + " trivial polynomial");
        }
    });
    return {4, "3-braid classification to band length 9", t.ok(),
            std::to_string(list.size()) + " classes, " + std::to_string(knots.load()) + " nontrivial knots; " +
                t.summary()};
}

BraidWord band_power(std::vector<int> unit, int k, std::vector<int> tail = {})
{
    std::vector<int> b;
    for (int i = 0; i < k; ++i)
        b.insert(b.end(), unit.begin(), unit.end());
    b.insert(b.end(), tail.begin(), tail.end());
    return band_to_artin(BandWord{b});
}

CriterionResult fiberedness(const AcceptanceOptions&)
{
    Tally t;
    std::ostringstream os;
    for (int k = 1; k <= 4; ++k) {
        BraidWord w = band_power({1, 2, 3}, k);
        Poly D = alexander(w);
        t.check(!is_fibered(w), "(123)^" + std::to_string(k) + " fibered");
        if (k % 2 == 0)
            t.check(D.is_zero(), "(123)^" + std::to_string(k) + " Delta != 0");
        else
            t.check(!D.is_zero() && D.max_cf() == 2, "(123)^" + std::to_string(k) + " maxcf");
        os << "k=" << k << ": " << (D.is_zero() ? std::string("0") : std::to_string(D.max_cf()));

        BraidWord v = band_power({1, 2, 3}, k, {-2});
        Poly E = alexander(v);
        t.check(is_fibered(v), "(123)^" + std::to_string(k) + "-2 not fibered");
        t.check(!E.is_zero() && std::abs(E.max_cf()) == 1, "(123)^" + std::to_string(k) + "-2 maxcf");
        os << "/" << (E.is_zero() ? std::string("0") : std::to_string(E.max_cf())) << " ";
    }
    return {5, "fiberedness of (123)^k and (123)^k -2", t.ok(), os.str() + "; " + t.summary()};
}

CriterionResult b6_tables_check(const AcceptanceOptions&)
{
    Tally t;
    const B6Tables& tab = b6_tables();
    Int sq = 0;
    for (Int d : tab.d)
        sq += d * d;
    t.check(sq == 720, "sum d^2 = " + std::to_string(sq));
    t.check(tab.e == std::vector<int>{0, 6, 10, 12, 12, 15, 18, 18, 20, 24, 30}, "e row");
    auto res = trace_identity_residuals();
    t.check(res.size() == 11, "trace identities for 11 diagrams");
    for (size_t y = 0; y < res.size(); ++y)
        t.check(res[y].is_zero(), "trace identity for " + to_string(tab.Y[y]));
    for (int k : {1, 3, 5}) {
        OneHookReport r = verify_onehook_traces(k);
        t.check(r.ok, "one-hook traces k=" + std::to_string(k));
    }
    return {6, "six-strand tables", t.ok(), "sum d^2 = " + std::to_string(sq) + "; " + t.summary()};
}

CriterionResult jones_conjecture(const AcceptanceOptions&)
{
    Tally t;
    std::ostringstream os;
    for (int a = 0; a <= 5; ++a) {
        QPoly c = b6_coefficient(a, 0);
        if (a < 2) {
            t.check(c.is_zero(), "a=" + std::to_string(a) + " nonzero");
            os << "a=" << a << ": 0 ";
            continue;
        }
        bool ok = !c.is_zero() && c.dmin() == 2 * (14 - 36 * a);
        t.check(ok, "a=" + std::to_string(a));
        os << "a=" << a << ": mindeg " << (c.is_zero() ? std::string("-") : std::to_string(c.dmin() / 2)) << " ";
    }
    return {7, "grouped six-strand coefficients", t.ok(), os.str() + "; " + t.summary()};
}

CriterionResult squier_suite(const AcceptanceOptions& opt)
{
    Tally t;
    std::mt19937_64 rng(opt.seed + 8);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    double det_err = 0, mod_err = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < 50; ++k) {
            UnitPoint p = UnitPoint::from_angle(ang(rng));
            double e = std::abs(squier_det(squier_form(n, p)) - squier_det_closed_form(n, p));
            det_err = std::max(det_err, e);
            t.check(e < 1e-12, "det n=" + std::to_string(n));

            double lim = 2 * std::numbers::pi / n;
            UnitPoint q = UnitPoint::from_angle(std::uniform_real_distribution<double>(-lim, lim)(rng) * 0.999);
            BraidWord w = random_word(rng, n, 1 + int(rng() % 12));
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(unitarized_burau(w, q));
            for (auto l : es.eigenvalues()) {
                double m = std::abs(std::abs(l) - 1);
                mod_err = std::max(mod_err, m);
                t.check(m < 1e-9, "modulus " + to_string(w));
            }
        }

    // genuine data at three roots of unity inside every region used
    const std::vector<UnitPoint> pts{UnitPoint::from_fraction(1, 7), UnitPoint::from_fraction(1, 8),
                                     UnitPoint::from_fraction(-1, 9)};
    std::atomic<int> inconclusive{0};
    for (int n : {3, 4}) {
        std::vector<BraidWord> ws;
        for (int k = 0; k < 500; ++k)
            ws.push_back(random_word(rng, n, 1 + int(rng() % 14)));
        parallel_for(ws.size(), [&](size_t i) {
            const BraidWord& w = ws[i];
            Poly V = n == 3 ? jones3(w) : jones4(w), D = alexander(w);
            int e = exponent_sum(w);
            for (auto& p : pts) {
                std::string tag = to_string(w);
                t.check(norm_tests(V, D, p, n).status != Status::Excluded, tag + " norm test");
                t.check(refined_test(D, e, p, n).status != Status::Excluded, tag + " refined test");
                if (n == 4) {
                    auto v = fourbraid_eigen_test(D, V, e, p);
                    t.check(v.status != Status::Excluded, tag + " eigenvalue test");
                    inconclusive += v.status == Status::Inconclusive;
                }
            }
        });
    }
    std::ostringstream os;
    os << "max det error " << det_err << ", max modulus error " << mod_err << ", eigenvalue test inconclusive "
       << inconclusive << "/1500; " << t.summary();
    return {8, "Squier form and unitarity tests", t.ok(), os.str()};
}

CriterionResult q_suite(const AcceptanceOptions& opt)
{
    Tally t;
    std::mt19937_64 rng(opt.seed + 9);
    int knots = 0;
    for (int k = 0; k < 100; ++k) {
        BraidWord w = random_word(rng, 3, 1 + int(rng() % 14));
        std::string tag = to_string(w);
        try {
            Poly q = murakami_q(w);
            t.check(q.is_integral(), tag + " Q integral");
            t.check(kanenobu_residual(w) == Rational(0), tag + " Kanenobu residual");
        } catch (const std::domain_error&) {
            t.check(false, tag + " Q denominators");
        }
        if (components(w) == 1) {
            ++knots;
            t.check(second_derivative_at_one(alexander(w)) / 2 == Rational(casson_v2(w)), tag + " v2");
        }
    }

    int sqp = 0;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (cur.size() >= 2) {
            BraidWord w = band_to_artin(BandWord{cur});
            if (components(w) == 1) {
                ++sqp;
                Int v2 = casson_v2(w);
                t.check(v2 >= (Int(cur.size()) - 2) / 2, to_string(BandWord{cur}) + " v2 < g");
                t.check(second_derivative_at_one(alexander(w)) / 2 == Rational(v2), to_string(BandWord{cur}) + " v2");
            }
        }
        if (left == 0)
            return;
        for (int a = 1; a <= 3; ++a) {
            cur.push_back(a);
            rec(left - 1);
            cur.pop_back();
        }
    };
    rec(10);
    return {9, "Q polynomial, Kanenobu and v2", t.ok(),
            "100 braids (" + std::to_string(knots) + " knots), " + std::to_string(sqp) + " SQP knot words; " +
                t.summary()};
}

double mahler(const Poly& p) { return p.is_zero() ? 0.0 : norms_and_mahler(p).mahler_roots; }

CriterionResult mahler_growth(const AcceptanceOptions&)
{
    Tally t;
    std::vector<double> md(31, 0), mv(31, 0);
    parallel_for(28, [&](size_t i) {
        int n = int(i) + 3;
        FamilyLn f = family_ln(n);
        md[size_t(n)] = mahler(f.Delta);
        mv[size_t(n)] = mahler(f.V);
    });
    t.check(md[30] > 2 * md[10], "Mahler growth of Delta");
    t.check(mv[30] > 2 * mv[10], "Mahler growth of V");
    for (int n = 1; n <= 8; ++n) {
        FamilyLn f = family_ln(n);
        BraidWord w = family_ln_word(n);
        t.check(f.V == jones3(w) && f.Delta == alexander(w), "closed form n=" + std::to_string(n));
    }
    std::ostringstream os;
    os << "M(Delta) " << md[10] << " -> " << md[30] << ", M(V) " << mv[10] << " -> " << mv[30] << "; " << t.summary();
    return {10, "Mahler growth of the L_n family", t.ok(), os.str()};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    using Fn = CriterionResult (*)(const AcceptanceOptions&);
    const std::vector<std::pair<std::string, Fn>> all{
        {"cross-path polynomial equality", cross_path},
        {"P(v, 1/v - v) = 1", p21_identity},
        {"MWF of the worked words", mwf_words},
        {"3-braid classification to band length 9", classification},
        {"fiberedness of (123)^k and (123)^k -2", fiberedness},
        {"six-strand tables", b6_tables_check},
        {"grouped six-strand coefficients", jones_conjecture},
        {"Squier form and unitarity tests", squier_suite},
        {"Q polynomial, Kanenobu and v2", q_suite},
        {"Mahler growth of the L_n family", mahler_growth},
    };
    std::vector<CriterionResult> out;
    for (int id = 1; id <= int(all.size()); ++id) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end())
            continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = all[size_t(id - 1)].second(opt);
        } catch (const std::exception& e) {
            r = {id, all[size_t(id - 1)].first, false, std::string("exception: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    }
    return out;
}

std::string format_line(const CriterionResult& r)
{
    std::ostringstream os;
    os.precision(3);
    os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " [" << std::fixed << r.seconds
       << "s] " << r.detail;
    return os.str();
}

} // namespace bf
