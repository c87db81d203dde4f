#include "braidforge/burau.hpp"
#include "braidforge/polyring.hpp"

#include <doctest.h>

#include <random>

using namespace bf;

namespace {

Poly T(int e) { return Poly::power(e); }

} // namespace

TEST_CASE("generator matrices and identity")
{
    CHECK(reduced_burau(BraidWord(4, {})) == LaurentMatrix::Identity(3, 3));
    std::mt19937_64 rng(4);
    for (int k = 0; k < 40; ++k) {
        auto w = random_word(rng, 2 + int(rng() % 4), int(rng() % 9));
        CHECK(reduced_burau(w) == reduced_burau_naive(w));
        auto wi = concat(w, inverse(w));
        CHECK(reduced_burau(wi) == LaurentMatrix::Identity(w.strands - 1, w.strands - 1));
        // det is (-t)^e
        Poly d = lmat_det(reduced_burau(w));
        int e = exponent_sum(w);
        CHECK(d == Poly::monomial(e % 2 ? -1 : 1, 2 * e));
    }
}

TEST_CASE("eigenvalues of the pinned words")
{
    auto m = reduced_burau(parse_braid("[2132]"));
    auto cp = char_poly(m);
    // (x - t)(x + t)(x + t^2) = x^3 + t^2 x^2 - t^2 x - t^4
    CHECK(cp[3] == Poly(1));
    CHECK(cp[2] == T(2));
    CHECK(cp[1] == -T(2));
    CHECK(cp[0] == -T(4));
    auto b = bar_hom(parse_braid("[2132]"));
    CHECK(b.letters == std::vector<int>{2, 1, 1, 2});
    auto cb = char_poly(reduced_burau(b));
    // (x - t)(x - t^3)
    CHECK(cb[1] == -(T(1) + T(3)));
    CHECK(cb[0] == T(4));
}

TEST_CASE("exterior powers")
{
    auto m = reduced_burau(parse_braid("[2132]"));
    CHECK(exterior_power(m, 0) == LaurentMatrix::Identity(1, 1));
    CHECK(exterior_power(m, 3)(0, 0) == lmat_det(m));
    // pairwise products of t, -t, -t^2
    Poly e2 = T(1) * -T(1) + T(1) * -T(2) + (-T(1)) * (-T(2));
    CHECK(lmat_trace(exterior_power(m, 2)) == e2);
    CHECK(trace_exterior(m, 2) == e2);
    // functoriality on a product
    std::mt19937_64 rng(8);
    auto a = random_word(rng, 5, 6), c = random_word(rng, 5, 6);
    auto L = exterior_power(reduced_burau(concat(a, c)), 2);
    auto R = lmat_mul(exterior_power(reduced_burau(a), 2), exterior_power(reduced_burau(c), 2));
    CHECK(L == R);
}

TEST_CASE("bar homomorphism")
{
    CHECK(bar_hom(BraidWord(4, {})).letters.empty());
    CHECK(bar_hom(BraidWord(4, {3})).letters == std::vector<int>{1});
    CHECK(bar_hom(BraidWord(4, {-3, 2})).letters == std::vector<int>{-1, 2});
}

TEST_CASE("Alexander polynomial")
{
    CHECK(alexander(BraidWord(2, {1, 1, 1})) == poly_from_human("t - 1 + t^-1"));
    CHECK(alexander(BraidWord(2, {1})) == Poly(1));
    CHECK(alexander(BraidWord(2, {1, 1})) == half_diff<Int>());
    CHECK(alexander(BraidWord(3, {1, -2, 1, -2})) == poly_from_human("-t + 3 - t^-1"));
    CHECK(alexander(BraidWord(3, {1, 2, 2, 1, -2, 1, 2, 2, 1, -2})).is_zero());
    CHECK(alexander(BraidWord(3, {1, 1})).is_zero());

    std::mt19937_64 rng(6);
    for (int k = 0; k < 60; ++k) {
        auto w = random_word(rng, 2 + int(rng() % 4), int(rng() % 10));
        Poly d = alexander(w);
        int c = components(w);
        CHECK(is_admissible_alexander(d, c));
        // conjugation and stabilization
        int r = int(rng() % 5);
        CHECK(alexander(cyclic_permute(w, r)) == d);
        std::vector<int> l = w.letters;
        l.push_back(rng() % 2 ? w.strands : -w.strands);
        CHECK(alexander(BraidWord(w.strands + 1, l)) == d);
    }
}

TEST_CASE("Jones trace formulas")
{
    CHECK(jones3(BraidWord(3, {1, 2})) == Poly(1));
    CHECK(jones4(BraidWord(4, {1, 2, 3})) == Poly(1));
    CHECK(jones3(BraidWord(3, {1, 1, 1, 2})) == poly_from_human("t + t^3 - t^4"));
    CHECK(jones3(BraidWord(3, {1, -2, 1, -2})) == poly_from_human("t^-2 - t^-1 + 1 - t + t^2"));
    std::mt19937_64 rng(10);
    for (int k = 0; k < 40; ++k) {
        auto w = random_word(rng, 3, int(rng() % 10));
        Poly v = jones3(w);
        auto l = w.letters;
        l.push_back(rng() % 2 ? 3 : -3);
        CHECK(jones4(BraidWord(4, l)) == v);
        CHECK(jones3(cyclic_permute(w, 1)) == v);
    }
}

TEST_CASE("the L_n family")
{
    for (int n = 1; n <= 8; ++n) {
        auto f = family_ln(n);
        auto w = family_ln_word(n);
        CHECK(f.V == jones3(w));
        CHECK(f.Delta == alexander(w));
        auto t = std::polar(1.0, 0.7);
        auto [vn, dn] = family_ln_numeric(n, t);
        CHECK(std::abs(vn - f.V.eval(t)) < 1e-9);
        CHECK(std::abs(dn - f.Delta.eval(t)) < 1e-9);
    }
    CHECK(family_ln(1).V == Poly(1));
    CHECK(family_ln(2).Delta == poly_from_human("-t + 3 - t^-1"));
    CHECK(components(family_ln_word(3)) == 3);
}
