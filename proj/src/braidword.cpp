#include "braidforge/braidword.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bf {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls))
{
    if (n < 1)
        throw std::invalid_argument("strand count must be positive");
    for (int g : letters)
        if (g == 0 || std::abs(g) >= n)
            throw std::invalid_argument("letter " + std::to_string(g) + " out of range for " + std::to_string(n) + " strands");
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    size_t end;

    Parser(const std::string& text, size_t b, size_t e) : s(text), pos(b), end(e) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, int(pos) + 1); }

    void skip_ws()
    {
        while (pos < end && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    int read_int()
    {
        skip_ws();
        bool neg = false;
        if (pos < end && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= end || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < end && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000)
                fail("integer too large");
            ++pos;
        }
        return int(neg ? -v : v);
    }

    // compact exponents are one digit so "^232" reads as ^2 then 3 2; use ^{12} for more
    int read_exponent()
    {
        skip_ws();
        if (pos < end && s[pos] == '{') {
            ++pos;
            int k = read_int();
            skip_ws();
            if (pos >= end || s[pos] != '}')
                fail("expected '}'");
            ++pos;
            return k;
        }
        bool neg = false;
        if (pos < end && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= end || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected exponent digit");
        int v = s[pos++] - '0';
        return neg ? -v : v;
    }

    std::vector<int> apply_power(std::vector<int> base)
    {
        skip_ws();
        if (pos < end && s[pos] == '^') {
            ++pos;
            int k = read_exponent();
            if (k == 0)
                fail("zero exponent");
            if (k < 0) {
                std::reverse(base.begin(), base.end());
                for (int& g : base)
                    g = -g;
                k = -k;
            }
            std::vector<int> out;
            out.reserve(base.size() * size_t(k));
            for (int i = 0; i < k; ++i)
                out.insert(out.end(), base.begin(), base.end());
            return out;
        }
        return base;
    }

    // sequence of atoms until ')' or end
    std::vector<int> sequence(bool in_group)
    {
        std::vector<int> out;
        for (;;) {
            skip_ws();
            if (pos >= end) {
                if (in_group)
                    fail("unclosed parenthesis");
                return out;
            }
            char c = s[pos];
            if (c == ')') {
                if (!in_group)
                    fail("unbalanced ')'");
                ++pos;
                return out;
            }
            bool neg = false;
            if (c == '-') {
                neg = true;
                ++pos;
                skip_ws();
                if (pos >= end)
                    fail("dangling '-'");
                c = s[pos];
            }
            std::vector<int> atom;
            if (c == '(') {
                ++pos;
                atom = sequence(true);
                if (neg) {
                    std::reverse(atom.begin(), atom.end());
                    for (int& g : atom)
                        g = -g;
                }
            } else if (c >= '1' && c <= '9') {
                atom.push_back(neg ? -(c - '0') : c - '0');
                ++pos;
            } else if (c == '0') {
                fail("zero generator");
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            auto p = apply_power(std::move(atom));
            out.insert(out.end(), p.begin(), p.end());
        }
    }

    std::vector<int> long_form()
    {
        std::vector<int> out;
        for (;;) {
            skip_ws();
            if (pos >= end)
                return out;
            if (s[pos] != 's')
                fail("expected 's<index>'");
            ++pos;
            if (pos >= end || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected generator index");
            int g = read_int();
            if (g <= 0)
                fail("zero generator");
            int k = 1;
            skip_ws();
            if (pos < end && s[pos] == '^') {
                ++pos;
                k = read_int();
                if (k == 0)
                    fail("zero exponent");
            }
            for (int i = 0; i < std::abs(k); ++i)
                out.push_back(k > 0 ? g : -g);
        }
    }
};

} // namespace

std::vector<int> parse_letters(const std::string& text)
{
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    if (b < e && text[b] == 's') {
        Parser p(text, b, e);
        return p.long_form();
    }
    if (b < e && text[b] == '[') {
        if (text[e - 1] != ']')
            throw ParseError("missing ']'", int(e));
        Parser p(text, b + 1, e - 1);
        return p.sequence(false);
    }
    Parser p(text, b, e);
    return p.sequence(false);
}

BraidWord parse_braid(const std::string& text)
{
    std::string body = text;
    int explicit_n = 0;
    auto at = text.rfind('@');
    if (at != std::string::npos) {
        body = text.substr(0, at);
        std::string tail = text.substr(at + 1);
        size_t used = 0;
        try {
            explicit_n = std::stoi(tail, &used);
        } catch (const std::exception&) {
            throw ParseError("bad strand count after '@'", int(at) + 2);
        }
        for (size_t i = used; i < tail.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(tail[i])))
                throw ParseError("trailing characters after strand count", int(at + 2 + i));
        if (explicit_n < 1)
            throw ParseError("strand count must be positive", int(at) + 2);
    }
    auto letters = parse_letters(body);
    int mx = 0;
    for (int g : letters)
        mx = std::max(mx, std::abs(g));
    int n = explicit_n ? explicit_n : mx + 1;
    if (mx >= n)
        throw ParseError("letter index " + std::to_string(mx) + " not below strand count " + std::to_string(n), int(at) + 1);
    return BraidWord(n, std::move(letters));
}

std::string to_string(const BraidWord& w)
{
    int mx = 0;
    for (int g : w.letters)
        mx = std::max(mx, std::abs(g));
    std::ostringstream os;
    if (mx >= 10) {
        bool first = true;
        for (int g : w.letters) {
            if (!first)
                os << ' ';
            first = false;
            os << 's' << std::abs(g);
            if (g < 0)
                os << "^-1";
        }
    } else {
        os << '[';
        for (int g : w.letters) {
            if (g < 0)
                os << '-';
            os << std::abs(g);
        }
        os << ']';
    }
    if (w.strands != mx + 1)
        os << '@' << w.strands;
    return os.str();
}

std::vector<Syllable> syllable_decomposition(const BraidWord& w, bool cyclic)
{
    std::vector<Syllable> out;
    auto push = [&](Syllable s) {
        while (true) {
            if (!out.empty() && out.back().index == s.index) {
                s.exponent += out.back().exponent;
                out.pop_back();
                continue;
            }
            break;
        }
        if (s.exponent != 0)
            out.push_back(s);
    };
    for (int g : w.letters)
        push({std::abs(g), g > 0 ? 1 : -1});
    if (cyclic) {
        while (out.size() > 1 && out.front().index == out.back().index) {
            out.back().exponent += out.front().exponent;
            out.erase(out.begin());
            if (out.back().exponent == 0) {
                out.pop_back();
                // re-merge what became adjacent
                if (out.size() > 1 && out.back().index == out[out.size() - 2].index) {
                    Syllable s = out.back();
                    out.pop_back();
                    out.back().exponent += s.exponent;
                    if (out.back().exponent == 0)
                        out.pop_back();
                }
            }
        }
    }
    return out;
}

WordStats word_stats(const BraidWord& w)
{
    WordStats s;
    s.length = w.length();
    s.gen_exponent.assign(size_t(std::max(0, w.strands - 1)), 0);
    for (int g : w.letters) {
        (g > 0 ? s.positive : s.negative)++;
        s.exponent_sum += g > 0 ? 1 : -1;
        s.index_sum += std::abs(g);
        s.gen_exponent[size_t(std::abs(g) - 1)] += g > 0 ? 1 : -1;
    }
    s.syllable_length = int(syllable_decomposition(w, false).size());
    s.non_singular = !s.gen_exponent.empty() &&
                     std::all_of(s.gen_exponent.begin(), s.gen_exponent.end(), [](int x) { return x > 1; });
    return s;
}

std::vector<int> schreier_vector(const BraidWord& w)
{
    if (w.strands != 3)
        throw std::invalid_argument("Schreier vector needs a 3-braid");
    auto syl = syllable_decomposition(w, true);
    if (syl.size() < 2 || syl.size() % 2)
        throw std::invalid_argument("non-alternating");
    std::vector<int> v;
    for (auto& s : syl)
        v.push_back(s.exponent);
    std::vector<int> best = v;
    for (size_t r = 1; r < v.size(); ++r) {
        std::vector<int> c(v.begin() + long(r), v.end());
        c.insert(c.end(), v.begin(), v.begin() + long(r));
        best = std::min(best, c);
    }
    return best;
}

ClosureData closure_data(const BraidWord& w)
{
    const int n = w.strands;
    ClosureData d;
    std::vector<int> at(static_cast<size_t>(n)); // position -> strand id (bottom position)
    std::iota(at.begin(), at.end(), 0);
    d.strand_lk.assign(size_t(n), std::vector<int>(size_t(n), 0));
    struct X { int a, b, sign, gen; };
    std::vector<X> xs;
    for (int g : w.letters) {
        int i = std::abs(g) - 1;
        int a = at[size_t(i)], b = at[size_t(i) + 1];
        int sg = g > 0 ? 1 : -1;
        d.strand_lk[size_t(a)][size_t(b)] += sg;
        d.strand_lk[size_t(b)][size_t(a)] += sg;
        xs.push_back({a, b, sg, std::abs(g)});
        std::swap(at[size_t(i)], at[size_t(i) + 1]);
    }
    d.permutation.assign(size_t(n), 0);
    for (int p = 0; p < n; ++p)
        d.permutation[size_t(at[size_t(p)])] = p;
    d.component_of_strand.assign(size_t(n), -1);
    for (int s = 0; s < n; ++s) {
        if (d.component_of_strand[size_t(s)] >= 0)
            continue;
        int c = d.components++;
        for (int x = s; d.component_of_strand[size_t(x)] < 0; x = d.permutation[size_t(x)])
            d.component_of_strand[size_t(x)] = c;
    }
    const auto nc = size_t(d.components);
    d.letter_sets.assign(nc, {});
    d.crossing_sum.assign(nc, std::vector<int>(nc, 0));
    for (auto& x : xs) {
        int ca = d.component_of_strand[size_t(x.a)], cb = d.component_of_strand[size_t(x.b)];
        d.letter_sets[size_t(ca)].insert(x.gen);
        d.letter_sets[size_t(cb)].insert(x.gen);
        if (ca != cb) {
            d.crossing_sum[size_t(ca)][size_t(cb)] += x.sign;
            d.crossing_sum[size_t(cb)][size_t(ca)] += x.sign;
        }
    }
    return d;
}

int components(const BraidWord& w)
{
    std::vector<int> at(static_cast<size_t>(w.strands));
    std::iota(at.begin(), at.end(), 0);
    for (int g : w.letters)
        std::swap(at[size_t(std::abs(g) - 1)], at[size_t(std::abs(g))]);
    std::vector<char> seen(size_t(w.strands), 0);
    int c = 0;
    for (int s = 0; s < w.strands; ++s) {
        if (seen[size_t(s)])
            continue;
        ++c;
        for (int x = s; !seen[size_t(x)]; x = at[size_t(x)])
            seen[size_t(x)] = 1;
    }
    return c;
}

BraidWord two_cable(const BraidWord& w)
{
    std::vector<int> out;
    for (int g : w.letters) {
        int i = std::abs(g);
        if (g > 0)
            out.insert(out.end(), {2 * i, 2 * i - 1, 2 * i + 1, 2 * i});
        else
            out.insert(out.end(), {-2 * i, -(2 * i + 1), -(2 * i - 1), -2 * i});
    }
    return BraidWord(2 * w.strands, std::move(out));
}

BraidWord free_reduce(const BraidWord& w)
{
    std::vector<int> st;
    for (int g : w.letters) {
        if (!st.empty() && st.back() == -g)
            st.pop_back();
        else
            st.push_back(g);
    }
    return BraidWord(w.strands, std::move(st));
}

BraidWord cyclic_reduce(const BraidWord& w)
{
    auto r = free_reduce(w).letters;
    size_t a = 0, b = r.size();
    while (b - a >= 2 && r[a] == -r[b - 1]) {
        ++a;
        --b;
    }
    return BraidWord(w.strands, std::vector<int>(r.begin() + long(a), r.begin() + long(b)));
}

BraidWord cyclic_permute(const BraidWord& w, int k)
{
    if (w.letters.empty())
        return w;
    int n = w.length();
    k = ((k % n) + n) % n;
    std::vector<int> r(w.letters.begin() + k, w.letters.end());
    r.insert(r.end(), w.letters.begin(), w.letters.begin() + k);
    return BraidWord(w.strands, std::move(r));
}

BraidWord mirror(const BraidWord& w)
{
    BraidWord r = w;
    for (int& g : r.letters)
        g = -g;
    return r;
}

BraidWord reverse(const BraidWord& w)
{
    BraidWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

BraidWord inverse(const BraidWord& w) { return mirror(reverse(w)); }

BraidWord concat(const BraidWord& a, const BraidWord& b)
{
    BraidWord r = a;
    r.strands = std::max(a.strands, b.strands);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord power(const BraidWord& w, int k)
{
    BraidWord base = k < 0 ? inverse(w) : w;
    BraidWord r(w.strands, {});
    for (int i = 0; i < std::abs(k); ++i)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

BraidWord with_strands(const BraidWord& w, int n) { return BraidWord(n, w.letters); }

bool is_positive(const BraidWord& w)
{
    return std::all_of(w.letters.begin(), w.letters.end(), [](int g) { return g > 0; });
}

bool is_negative(const BraidWord& w)
{
    return std::all_of(w.letters.begin(), w.letters.end(), [](int g) { return g < 0; });
}

bool can_destabilize(const BraidWord& w)
{
    if (w.strands < 2)
        return false;
    int cnt = 0;
    for (int g : w.letters)
        if (std::abs(g) == w.strands - 1)
            ++cnt;
    return cnt == 1;
}

BraidWord markov_destabilize(const BraidWord& w)
{
    if (!can_destabilize(w))
        throw std::invalid_argument("last generator is not isolated");
    int top = w.strands - 1;
    auto it = std::find_if(w.letters.begin(), w.letters.end(), [&](int g) { return std::abs(g) == top; });
    int k = int(it - w.letters.begin());
    BraidWord r = cyclic_permute(w, k + 1);
    r.letters.pop_back();
    r.strands -= 1;
    return r;
}

bool contains_subword(const BraidWord& w, const std::vector<int>& sub, bool cyclic)
{
    const auto& l = w.letters;
    if (sub.empty())
        return true;
    if (l.empty())
        return false;
    size_t n = l.size();
    size_t starts = cyclic ? n : (n >= sub.size() ? n - sub.size() + 1 : 0);
    if (!cyclic && sub.size() > n)
        return false;
    for (size_t s = 0; s < starts; ++s) {
        bool ok = true;
        for (size_t j = 0; j < sub.size() && ok; ++j)
            ok = l[(s + j) % n] == sub[j];
        if (ok)
            return true;
    }
    return false;
}

int exponent_sum(const BraidWord& w)
{
    int e = 0;
    for (int g : w.letters)
        e += g > 0 ? 1 : -1;
    return e;
}

BraidWord min_rotation(const BraidWord& w)
{
    BraidWord best = w;
    for (int k = 1; k < w.length(); ++k) {
        BraidWord c = cyclic_permute(w, k);
        if (c.letters < best.letters)
            best = c;
    }
    return best;
}

BraidWord half_twist(int n)
{
    std::vector<int> l;
    for (int i = n - 1; i >= 1; --i)
        for (int j = 1; j <= i; ++j)
            l.push_back(j);
    return BraidWord(n, l);
}

BraidWord full_twist(int n) { return power(half_twist(n), 2); }

BraidWord random_word(std::mt19937_64& rng, int strands, int length, bool positive_only)
{
    std::uniform_int_distribution<int> gen(1, std::max(1, strands - 1));
    std::bernoulli_distribution sgn(0.5);
    std::vector<int> l;
    for (int i = 0; i < length; ++i) {
        int g = gen(rng);
        l.push_back(positive_only || sgn(rng) ? g : -g);
    }
    return BraidWord(strands, std::move(l));
}

} // namespace bf
