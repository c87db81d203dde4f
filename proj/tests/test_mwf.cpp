#include "braidforge/hecke.hpp"
#include "braidforge/mwf.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace bf;

namespace {

BraidWord pw(const std::string& s) { return parse_braid("[" + s + "]"); }

int skein_mwf(const BraidWord& w) { return mwf_bound(w.strands <= 4 ? skein4(w) : homfly_oracle(w, 16)); }

void positive_words(int n, int len, const std::function<void(const BraidWord&)>& f)
{
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        if (int(cur.size()) == len) {
            f(BraidWord(n, cur));
            return;
        }
        for (int g = 1; g < n; ++g) {
            cur.push_back(g);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

// members of the two exceptional families with random repetition counts
BraidWord family_word(std::mt19937_64& rng, int fam)
{
    auto rep = [&](char c, int lo) { return std::string(size_t(lo + int(rng() % 2)), c); };
    std::string s = fam == 1 ? rep('2', 2) + rep('3', 1) + "1" + rep('2', 2) + rep('1', 2) + "232" + rep('1', 2)
                             : rep('2', 2) + "31" + rep('2', 2) + rep('1', 2) + "2" + rep('3', 1) + "2" + rep('1', 2);
    return BraidWord(4, parse_letters(s));
}

} // namespace

TEST_CASE("worked examples")
{
    struct Ex {
        const char* w;
        int mwf;
    };
    for (auto [s, v] : {Ex{"123122112321", 3}, Ex{"1231221122321", 4}, Ex{"12322312232112321", 4},
                        Ex{"1232231211123221", 4}, Ex{"12223223223223121112222321", 3}}) {
        auto w = pw(s);
        CHECK_MESSAGE(resolution_mwf(w) == v, s);
        CHECK_MESSAGE(skein_mwf(w) == v, s);
    }
    CHECK(resolution_mwf(BraidWord(4, {})) == 4);
    CHECK(resolution_mwf(pw("111")) == 2);
    CHECK_THROWS_AS(resolution_mwf(BraidWord(3, {1, -2})), std::invalid_argument);
}

TEST_CASE("resolution trees agree with the skein bound")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; ++t) {
        int n = 3 + int(rng() % 3);
        int len = n == 5 ? 4 + int(rng() % 10) : 4 + int(rng() % 14);
        auto w = random_word(rng, n, len, true);
        CHECK_MESSAGE(resolution_mwf(w) == skein_mwf(w), to_string(w));
    }
}

TEST_CASE("explicit trees")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        auto w = random_word(rng, 3 + int(rng() % 2), 4 + int(rng() % 8), true);
        auto tr = resolution_tree(w);
        int best = 0;
        for (auto& nd : tr.nodes) {
            CHECK((nd.children.empty() || nd.children.size() == 2));
            CHECK(nd.components == components(nd.word));
            if (nd.children.empty())
                CHECK(nd.word.empty());
            else
                CHECK(components(nd.word) <= std::max(tr.nodes[size_t(nd.children[0])].components,
                                                      tr.nodes[size_t(nd.children[1])].components) + 1);
            best = std::max(best, nd.components);
        }
        CHECK(best == resolution_mwf(w));
        // the closure of the root is the input link up to Markov moves
        CHECK(skein_mwf(tr.nodes[0].word) == skein_mwf(w));
    }
}

TEST_CASE("monotone under extension and blind to long syllables")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + int(rng() % 2);
        auto w = random_word(rng, n, 4 + int(rng() % 8), true);
        int m = resolution_mwf(w);
        // extend a trivial syllable
        auto syl = syllable_decomposition(w, false);
        std::vector<int> ext;
        for (auto& y : syl)
            ext.insert(ext.end(), size_t(y.exponent == 1 && rng() % 2 ? 2 + rng() % 2 : y.exponent), y.index);
        CHECK(resolution_mwf(BraidWord(n, ext)) >= m);

        // raise a non-trivial syllable
        for (size_t k = 0; k + 1 < w.letters.size(); ++k)
            if (w.letters[k] == w.letters[k + 1]) {
                auto y = w;
                y.letters.insert(y.letters.begin() + long(k), w.letters[k]);
                CHECK(resolution_mwf(y) == m);
                break;
            }
    }
}

TEST_CASE("one component iff every generator once")
{
    std::mt19937_64 rng(37);
    for (int t = 0; t < 80; ++t) {
        auto w = random_word(rng, 3 + int(rng() % 3), 2 + int(rng() % 8), true);
        auto st = word_stats(w);
        bool ones = std::all_of(st.gen_exponent.begin(), st.gen_exponent.end(), [](int e) { return e == 1; });
        CHECK((resolution_mwf(w) == 1) == ones);
    }
    CHECK(resolution_mwf(pw("123")) == 1);
    CHECK(resolution_mwf(pw("1213")) > 1);
}

TEST_CASE("summit structure")
{
    auto s = summit_structure(pw("12321"));
    CHECK(std::all_of(s.summit.begin(), s.summit.end(), [](bool b) { return b; }));
    CHECK(s.heights == std::vector<int>{3});
    CHECK(s.depths == std::vector<int>{1});

    // two mountains of height n-1
    auto w = pw("123122112321");
    auto t = summit_structure(w);
    CHECK(std::count(t.heights.begin(), t.heights.end(), 3) == 2);
    CHECK(non_maximal_subword(w).length() + maximal_subword(w).length() == w.length());

    CHECK_THROWS_AS(summit_structure(BraidWord(3, {1, -2})), std::invalid_argument);
}

TEST_CASE("index reduced words are summit reduced")
{
    int checked = 0;
    for (int n : {3, 4})
        for (int len = 1; len <= 10; ++len)
            positive_words(n, len, [&](const BraidWord& w) {
                if (!is_index_reduced(w))
                    return;
                ++checked;
                CHECK_MESSAGE(is_summit_reduced(w), to_string(w));
            });
    CHECK(checked > 1000);
    // the pattern may only show after commuting s1 past s3
    CHECK(!is_index_reduced(pw("3333312321")));
    CHECK(!is_index_reduced(pw("12")));
    CHECK(is_index_reduced(pw("11221122")));
}

TEST_CASE("summit reduction and valleys stay inside the tree")
{
    std::mt19937_64 rng(41);
    int reduced = 0, filled = 0;
    for (int t = 0; t < 400 && (reduced < 40 || filled < 40); ++t) {
        int n = 3 + int(rng() % 3);
        auto w = random_word(rng, n, 6 + int(rng() % 10), true);
        if (!word_stats(w).non_singular)
            continue;
        int m = resolution_mwf(w);
        if (is_summit_reduced(w)) {
            ++reduced;
            CHECK(m >= 3);
            auto r = remove_summit(w);
            CHECK(components(r) <= m);
            CHECK(resolution_mwf(r) <= m);
        }
        auto s = summit_structure(w);
        for (int p : s.minimal_positions) {
            if (s.syllables[size_t(p)].exponent < 2) {
                CHECK_THROWS_AS(fill_valley(w, p), std::invalid_argument);
                continue;
            }
            auto f = fill_valley(w, p);
            ++filled;
            CHECK(f.length() < w.length());
            CHECK(components(f) <= m);
            CHECK(resolution_mwf(f) <= m);
        }
    }
    CHECK(reduced >= 20);
    CHECK(filled >= 20);
}

TEST_CASE("exceptional family")
{
    auto b0 = pw("1223122112321");
    auto e = thmwf_exception_match(b0);
    CHECK(e.matched);
    CHECK(e.family == 1);
    CHECK(resolution_mwf(b0) == 3);
    CHECK(!thmwf_exception_match(pw("123122112321")).matched);
    auto e2 = thmwf_exception_match(pw("22312211233211"));
    CHECK(e2.matched);
    CHECK(e2.family == 2);

    std::mt19937_64 rng(43);
    for (int t = 0; t < 12; ++t) {
        int fam = 1 + t % 2;
        auto w = cyclic_permute(family_word(rng, fam), int(rng() % 10));
        auto m = thmwf_exception_match(w);
        CHECK(m.matched);
        if (fam == 1)
            CHECK(m.family == 1);
        CHECK_MESSAGE(resolution_mwf(w) == 3, to_string(w));
    }
    int fours = 0;
    for (int t = 0; t < 300 && fours < 30; ++t) {
        auto w = random_word(rng, 4, 8 + int(rng() % 10), true);
        if (resolution_mwf(w) != 4)
            continue;
        ++fours;
        CHECK(!thmwf_exception_match(w).matched);
    }
    CHECK(fours >= 10);
}
