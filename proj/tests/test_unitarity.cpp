#include "braidforge/burau.hpp"
#include "braidforge/unitarity.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <random>

using namespace bf;

namespace {

constexpr double pi = 3.14159265358979323846;

UnitPoint at(double frac) { return UnitPoint::from_angle(2 * pi * frac); }

// a random point with |arg t| < limit
UnitPoint random_point(std::mt19937_64& rng, double limit)
{
    std::uniform_real_distribution<double> u(-limit, limit);
    return UnitPoint::from_angle(u(rng));
}

BraidWord nonsplit_word(std::mt19937_64& rng, int n, int len)
{
    while (true) {
        auto w = random_word(rng, n, len);
        std::vector<bool> seen(size_t(n), false);
        for (int l : w.letters)
            seen[size_t(std::abs(l))] = true;
        bool ok = true;
        for (int i = 1; i < n; ++i)
            ok = ok && seen[size_t(i)];
        if (ok)
            return w;
    }
}

} // namespace

TEST_CASE("Squier form")
{
    for (int n = 2; n <= 8; ++n) {
        CHECK(is_positive_definite(squier_form(n, at(0))));
        CHECK(std::abs(squier_det(squier_form(n, at(0))) - double(n)) < 1e-12);
        // degenerate at the primitive n-th root
        CHECK(std::abs(squier_det(squier_form(n, at(1.0 / n)))) < 1e-12);
    }
    auto t = at(0.1);
    CHECK(std::abs(squier_det(squier_form(2, t)) - (t.s + 1.0 / t.s)) < 1e-15);

    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < 50; ++k) {
            auto p = UnitPoint::from_angle(u(rng));
            if (std::abs(p.s - 1.0 / p.s) < 1e-3)
                continue;
            CHECK(std::abs(squier_det(squier_form(n, p)) - squier_det_closed_form(n, p)) < 1e-12);
            double a = std::abs(std::arg(p.t));
            if (std::abs(a - 2 * pi / n) > 1e-6)
                CHECK(is_positive_definite(squier_form(n, p)) == in_definiteness_region(n, p));
        }
}

TEST_CASE("Burau matrices preserve the invariant form")
{
    std::mt19937_64 rng(53);
    for (int k = 0; k < 60; ++k) {
        int n = 2 + int(rng() % 5);
        auto w = random_word(rng, n, 1 + int(rng() % 10));
        auto p = random_point(rng, pi);
        Eigen::MatrixXcd J0 = squier_invariant_form(n, p);
        CHECK((J0 - J0.adjoint()).norm() < 1e-14);
        Eigen::MatrixXcd m = evaluate(reduced_burau(w), p.s);
        CHECK((m.adjoint() * J0 * m - J0).norm() < 1e-8 * (1 + J0.norm()));
    }
}

TEST_CASE("unitarized Burau")
{
    std::mt19937_64 rng(59);
    for (int k = 0; k < 80; ++k) {
        int n = 2 + int(rng() % 5);
        auto w = random_word(rng, n, 1 + int(rng() % 12));
        auto p = random_point(rng, 0.95 * 2 * pi / n);
        Eigen::MatrixXcd U = unitarized_burau(w, p);
        CHECK((U.adjoint() * U - Eigen::MatrixXcd::Identity(n - 1, n - 1)).norm() < 1e-9);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(U);
        for (int i = 0; i < n - 1; ++i)
            CHECK(std::abs(std::abs(es.eigenvalues()(i)) - 1) < 1e-9);
    }
    CHECK_THROWS_AS(unitarized_burau(BraidWord(4, {1, 2, 3}), at(0.3)), std::domain_error);
}

TEST_CASE("norm tests")
{
    // the bound at the fifth root of unity on 4 strands
    auto v5 = alexander_norm_test(Poly(1), at(0.2), 4);
    CHECK(std::abs(v5.bound - 8) < 1e-9);

    std::mt19937_64 rng(61);
    int tested = 0;
    for (int k = 0; k < 500; ++k) {
        auto w = random_word(rng, 4, 1 + int(rng() % 14));
        Poly V = jones4(w), D = alexander(w);
        for (double f : {1.0 / 8, 1.0 / 5, 1.0 / 9}) {
            auto p = at(f);
            CHECK(norm_tests(V, D, p, 4).status == Status::Consistent);
            CHECK(refined_test(D, exponent_sum(w), p, 4).status == Status::Consistent);
            ++tested;
        }
    }
    for (int k = 0; k < 300; ++k) {
        auto w = random_word(rng, 3, 1 + int(rng() % 14));
        Poly V = jones3(w), D = alexander(w);
        for (double f : {1.0 / 7, 1.0 / 4, 0.3}) {
            auto p = at(f);
            CHECK(norm_tests(V, D, p, 3).status == Status::Consistent);
            CHECK(refined_test(D, exponent_sum(w), p, 3).status == Status::Consistent);
        }
    }
    CHECK(tested == 1500);

    CHECK(jones_norm_test(Poly(100), at(1.0 / 8), 4).status == Status::Excluded);
    // the closed form agrees with the unitarity bound inside its range
    for (int k = -99; k <= 99; ++k) {
        double a4 = k / 100.0 * 0.2, a3 = k / 100.0 * 0.25;
        if (k == 0)
            continue;
        CHECK(std::abs(jones_norm_bound(at(a4), 4) - jones_norm_closed_form(at(a4), 4)) < 1e-9);
        CHECK(std::abs(jones_norm_bound(at(a3), 3) - jones_norm_closed_form(at(a3), 3)) < 1e-9);
    }
    // and is too small beyond it: the full twist on 3 strands at t = e^(0.6 pi i)
    Poly ft = jones3(BraidWord(3, {1, 2, 1, 2, 1, 2}));
    CHECK(std::abs(ft.eval_half(at(0.3).s)) > jones_norm_closed_form(at(0.3), 3) + 0.1);
    CHECK(jones_norm_test(ft, at(0.3), 3).status == Status::Consistent);
    CHECK_THROWS_AS(jones_norm_test(Poly(1), at(0.3), 4), std::invalid_argument);
    CHECK_THROWS_AS(alexander_norm_test(Poly(1), at(0.3), 4), std::invalid_argument);

    // the unknot on three strands
    CHECK(refined_test(Poly(1), 0, at(0.01), 3).status == Status::Consistent);
    // trefoil data with a wrong exponent sum
    BraidWord tre(3, {1, 1, 1, 2});
    Poly Dt = alexander(tre);
    bool excluded = false;
    for (int k = 1; k < 10; ++k)
        excluded = excluded || refined_test(Dt, exponent_sum(tre) + 2, at(k / 30.0), 3).status == Status::Excluded;
    CHECK(excluded);
}

TEST_CASE("trace data of genuine 4-braids")
{
    std::mt19937_64 rng(67);
    for (int k = 0; k < 200; ++k) {
        auto w = random_word(rng, 4, 1 + int(rng() % 14));
        auto p = random_point(rng, pi / 2);
        auto d = burau_trace_data(w, p);
        CHECK(std::abs(d.delta.imag()) < 1e-9);
        CHECK(std::abs(d.rho.imag()) < 1e-9);
        CHECK(std::abs(d.rho.real()) <= 2 + 1e-9);
        CHECK(std::abs(d.y.imag()) < 1e-9);
    }
}

TEST_CASE("eigenvalue test never excludes a real 4-braid")
{
    std::mt19937_64 rng(71);
    int excluded = 0, inconclusive = 0;
    for (int k = 0; k < 300; ++k) {
        auto w = random_word(rng, 4, 1 + int(rng() % 14));
        Poly V = jones4(w), D = alexander(w);
        int e = exponent_sum(w);
        for (int m : {7, 8, 9}) {
            auto v = fourbraid_eigen_test(D, V, e, at(1.0 / m), 1e-3);
            excluded += v.status == Status::Excluded;
            inconclusive += v.status == Status::Inconclusive;
            if (v.status == Status::Excluded)
                MESSAGE(to_string(w) << " at 2pi/" << m << ": " << v.reason);
        }
    }
    CHECK(excluded == 0);
    CHECK(inconclusive == 0);
}

TEST_CASE("eigenvalue test rejects perturbed data")
{
    std::mt19937_64 rng(73);
    int tried = 0, flagged = 0, scaled = 0;
    for (int k = 0; k < 40; ++k) {
        auto w = nonsplit_word(rng, 4, 6 + int(rng() % 8));
        Poly V = jones4(w), D = alexander(w);
        int e = exponent_sum(w);
        ++tried;
        // V t: no longer the Jones polynomial of anything with these data
        bool hit = false, big = false;
        for (int m : {5, 6, 7, 8, 9, 10, 12}) {
            hit = hit || fourbraid_eigen_test(D, V * Poly::power(1), e, at(1.0 / m), 1e-3).status != Status::Consistent;
            big = big || fourbraid_eigen_test(D * Poly(7), V, e, at(1.0 / m), 1e-3).status == Status::Excluded;
        }
        flagged += hit;
        scaled += big;
    }
    MESSAGE("perturbed samples flagged: " << flagged << ", scaled Alexander excluded: " << scaled << " of " << tried);
    CHECK(2 * flagged > tried);
    CHECK(2 * scaled > tried);
    CHECK_THROWS_AS(fourbraid_eigen_test(Poly(1), Poly(1), 0, at(0.3)), std::invalid_argument);
}
