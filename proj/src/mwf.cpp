#include "braidforge/mwf.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <regex>
#include <set>
#include <stdexcept>

namespace bf {

namespace {

void require_positive(const BraidWord& w)
{
    if (!is_positive(w))
        throw std::invalid_argument("word is not positive");
}

using Letters = std::vector<int>;

Letters least_rotation(const Letters& l)
{
    Letters best = l, cur = l;
    for (size_t k = 1; k < l.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best)
            best = cur;
    }
    return best;
}

// one block on n strands with every generator 1..n-1 present: drop a generator met once
// (the closure is a connected sum, read as a braid on one strand fewer)
bool destabilize_once(int& n, Letters& l)
{
    for (int g = 1; g < n; ++g) {
        if (std::count(l.begin(), l.end(), g) != 1)
            continue;
        size_t at = size_t(std::find(l.begin(), l.end(), g) - l.begin());
        Letters lo, hi;
        for (size_t k = 1; k < l.size(); ++k) {
            int x = l[(at + k) % l.size()];
            (x < g ? lo : hi).push_back(x < g ? x : x - 1);
        }
        lo.insert(lo.end(), hi.begin(), hi.end());
        l = lo;
        --n;
        return true;
    }
    return false;
}

void split_into(int n, const Letters& l, NodeForm& f)
{
    std::vector<bool> used(size_t(n), false);
    for (int x : l)
        used[size_t(x)] = true;
    int a = 1; // first strand of the current run
    while (a <= n) {
        int b = a;
        while (b < n && used[size_t(b)])
            ++b;
        // strands a..b joined by generators a..b-1
        if (b == a) {
            ++f.loose;
        } else {
            int m = b - a + 1;
            Letters sub;
            for (int x : l)
                if (x >= a && x < b)
                    sub.push_back(x - a + 1);
            if (destabilize_once(m, sub))
                split_into(m, sub, f);
            else
                f.blocks.emplace_back(m, least_rotation(sub));
        }
        a = b + 1;
    }
}

// positive moves (commutation, braid relation) on a cyclic word until a square s_i s_i shows up
Letters find_square(const Letters& start, size_t budget)
{
    auto has_square = [](const Letters& l) {
        for (size_t k = 0; k < l.size(); ++k)
            if (l[k] == l[(k + 1) % l.size()])
                return true;
        return false;
    };
    if (has_square(start))
        return start;
    std::set<Letters> seen{least_rotation(start)};
    std::deque<Letters> todo{start};
    const size_t n = start.size();
    while (!todo.empty()) {
        Letters cur = todo.front();
        todo.pop_front();
        auto visit = [&](Letters nx) -> bool {
            if (has_square(nx)) {
                cur = nx;
                return true;
            }
            if (seen.insert(least_rotation(nx)).second) {
                if (seen.size() > budget)
                    throw std::runtime_error("positive move search over budget");
                todo.push_back(std::move(nx));
            }
            return false;
        };
        for (size_t k = 0; k < n; ++k) {
            int a = cur[k], b = cur[(k + 1) % n], c = cur[(k + 2) % n];
            if (std::abs(a - b) >= 2) {
                Letters nx = cur;
                std::swap(nx[k], nx[(k + 1) % n]);
                if (visit(nx))
                    return cur;
            }
            if (n >= 3 && a == c && std::abs(a - b) == 1) {
                Letters nx = cur;
                nx[k] = b, nx[(k + 1) % n] = a, nx[(k + 2) % n] = b;
                if (visit(nx))
                    return cur;
            }
        }
    }
    throw std::logic_error("no square among positive moves of a non-singular word");
}

// the two children of a square site, first site in the word
std::pair<Letters, Letters> resolve(const Letters& l)
{
    size_t n = l.size(), k = 0;
    while (l[k] != l[(k + 1) % n])
        ++k;
    Letters one, none;
    for (size_t j = 0; j < n; ++j) {
        if (j != k)
            one.push_back(l[j]);
        if (j != k && j != (k + 1) % n)
            none.push_back(l[j]);
    }
    return {one, none};
}

BraidWord flatten(const NodeForm& f)
{
    BraidWord out(1, {});
    int off = 0;
    for (auto& b : f.blocks) {
        for (int x : b.letters)
            out.letters.push_back(x + off);
        off += b.strands;
    }
    out.strands = std::max(1, off + f.loose);
    return out;
}

} // namespace

int NodeForm::components() const
{
    int c = loose;
    for (auto& b : blocks)
        c += bf::components(b);
    return c;
}

NodeForm node_form(const BraidWord& w)
{
    require_positive(w);
    NodeForm f;
    split_into(w.strands, w.letters, f);
    std::sort(f.blocks.begin(), f.blocks.end());
    return f;
}

int resolution_mwf(const BraidWord& w, size_t budget)
{
    std::map<BraidWord, int> memo;
    std::function<int(const NodeForm&)> form_mwf;
    std::function<int(const BraidWord&)> block_mwf = [&](const BraidWord& b) {
        if (auto it = memo.find(b); it != memo.end())
            return it->second;
        if (memo.size() >= budget)
            throw std::runtime_error("resolution tree over budget");
        auto [one, none] = resolve(find_square(b.letters, budget));
        int best = std::max({components(b), form_mwf(node_form(BraidWord(b.strands, one))),
                             form_mwf(node_form(BraidWord(b.strands, none)))});
        memo.emplace(b, best);
        return best;
    };
    form_mwf = [&](const NodeForm& f) {
        int c = f.loose;
        for (auto& b : f.blocks)
            c += block_mwf(b);
        return c;
    };
    return form_mwf(node_form(w));
}

ResolutionTree resolution_tree(const BraidWord& w, size_t budget)
{
    ResolutionTree t;
    std::function<int(const BraidWord&)> grow = [&](const BraidWord& x) {
        if (t.nodes.size() >= budget)
            throw std::runtime_error("resolution tree over budget");
        NodeForm f = node_form(x);
        int id = int(t.nodes.size());
        t.nodes.push_back({flatten(f), f.components(), {}});
        if (f.blocks.empty())
            return id;
        // resolve in the first block, keep the others as they are
        const BraidWord& b = f.blocks.front();
        auto [one, none] = resolve(find_square(b.letters, budget));
        int ids[2];
        int k = 0;
        for (auto* part : {&one, &none}) {
            NodeForm g = f;
            g.blocks.front() = BraidWord(b.strands, *part);
            ids[k++] = grow(flatten(g));
        }
        t.nodes[size_t(id)].children = {ids[0], ids[1]};
        return id;
    };
    grow(w);
    return t;
}

SummitStructure summit_structure(const BraidWord& w)
{
    require_positive(w);
    SummitStructure s;
    s.syllables = syllable_decomposition(w, true);
    const size_t m = s.syllables.size();
    s.summit.assign(m, false);
    if (m == 0)
        return s;
    const int n = w.strands;
    auto idx = [&](size_t p) { return s.syllables[p % m].index; };
    for (size_t p = 0; p < m; ++p)
        s.summit[p] = idx(p) == n - 1;
    for (int k = n - 1; k >= 2; --k) {
        std::vector<size_t> at;
        for (size_t p = 0; p < m; ++p)
            if (s.summit[p] && idx(p) == k)
                at.push_back(p);
        for (size_t t = 0; t < at.size(); ++t) {
            size_t from = at[t], to = at[(t + 1) % at.size()];
            size_t len = (to + m - from) % m;
            if (len == 0)
                len = m;
            bool clear = true;
            for (size_t q = 1; q < len && clear; ++q)
                clear = idx(from + q) < k;
            if (!clear)
                continue;
            for (size_t q = 1; q < len; ++q)
                if (idx(from + q) == k - 1)
                    s.summit[(from + q) % m] = true;
        }
    }
    for (size_t p = 0; p < m; ++p)
        if (s.summit[p])
            s.maximal.push_back(int(p));
    const size_t r = s.maximal.size();
    if (r >= 2)
        for (size_t t = 0; t < r; ++t) {
            int here = idx(size_t(s.maximal[t]));
            int prev = idx(size_t(s.maximal[(t + r - 1) % r])), next = idx(size_t(s.maximal[(t + 1) % r]));
            if (prev > here && next > here) {
                s.minimal_positions.push_back(s.maximal[t]);
                s.depths.push_back(here);
            }
            if (prev < here && next < here) {
                s.maximal_positions.push_back(s.maximal[t]);
                s.heights.push_back(here);
            }
        }
    std::vector<size_t> ones;
    for (size_t t = 0; t < r; ++t)
        if (idx(size_t(s.maximal[t])) == 1)
            ones.push_back(t);
    if (ones.empty()) {
        if (r)
            s.plateaus.push_back(s.maximal);
    } else {
        for (size_t u = 0; u < ones.size(); ++u) {
            std::vector<int> run;
            for (size_t t = (ones[u] + 1) % r; t != ones[(u + 1) % ones.size()]; t = (t + 1) % r)
                run.push_back(s.maximal[t]);
            if (!run.empty())
                s.plateaus.push_back(run);
        }
    }
    return s;
}

namespace {

BraidWord pick(const BraidWord& w, const SummitStructure& s, bool summit)
{
    BraidWord out(w.strands, {});
    for (size_t p = 0; p < s.syllables.size(); ++p)
        if (s.summit[p] == summit)
            out.letters.insert(out.letters.end(), size_t(s.syllables[p].exponent), s.syllables[p].index);
    return out;
}

} // namespace

BraidWord maximal_subword(const BraidWord& w) { return pick(w, summit_structure(w), true); }
BraidWord non_maximal_subword(const BraidWord& w) { return pick(w, summit_structure(w), false); }

bool is_index_reduced(const BraidWord& w, size_t budget)
{
    require_positive(w);
    if (!word_stats(w).non_singular)
        return false;
    // s_{i+1} s_i s_{i+1} anywhere in the cyclic word, after far commutations
    auto bad = [&](const Letters& l) {
        for (int i = 1; i + 1 < w.strands; ++i)
            if (contains_subword(BraidWord(w.strands, l), {i + 1, i, i + 1}))
                return true;
        return false;
    };
    std::set<Letters> seen{least_rotation(w.letters)};
    std::deque<Letters> todo{w.letters};
    const size_t n = w.letters.size();
    while (!todo.empty()) {
        Letters cur = std::move(todo.front());
        todo.pop_front();
        if (bad(cur))
            return false;
        for (size_t k = 0; k < n; ++k)
            if (std::abs(cur[k] - cur[(k + 1) % n]) >= 2) {
                Letters nx = cur;
                std::swap(nx[k], nx[(k + 1) % n]);
                if (seen.insert(least_rotation(nx)).second) {
                    if (seen.size() > budget)
                        throw std::runtime_error("commutation class over budget");
                    todo.push_back(std::move(nx));
                }
            }
    }
    return true;
}

bool is_summit_reduced(const BraidWord& w)
{
    auto s = summit_structure(w);
    for (int p : s.minimal_positions)
        if (s.syllables[size_t(p)].exponent < 2)
            return false;
    return true;
}

BraidWord remove_summit(const BraidWord& w)
{
    if (!is_summit_reduced(w))
        throw std::invalid_argument("word is not summit reduced");
    return non_maximal_subword(w);
}

BraidWord fill_valley(const BraidWord& w, int position)
{
    auto s = summit_structure(w);
    if (std::find(s.minimal_positions.begin(), s.minimal_positions.end(), position) == s.minimal_positions.end())
        throw std::invalid_argument("not a valley bottom");
    BraidWord cur = w;
    while (true) {
        if (s.syllables[size_t(position)].exponent < 2)
            throw std::invalid_argument("valley bottom is trivial");
        // rebuild the word from syllables without the bottom, starting just after it
        const size_t m = s.syllables.size();
        BraidWord nx(w.strands, {});
        for (size_t q = 1; q < m; ++q) {
            auto& y = s.syllables[(size_t(position) + q) % m];
            nx.letters.insert(nx.letters.end(), size_t(y.exponent), y.index);
        }
        cur = nx;
        // the neighbours now sit at the two ends; they merge if they share an index
        if (m < 3 || s.syllables[(size_t(position) + 1) % m].index != s.syllables[(size_t(position) + m - 1) % m].index)
            return cur;
        s = summit_structure(cur);
        // the merged syllable is the cyclic syllable that straddles the end of nx, stored last
        int merged = int(s.syllables.size()) - 1;
        if (std::find(s.minimal_positions.begin(), s.minimal_positions.end(), merged) == s.minimal_positions.end())
            return cur;
        position = merged;
    }
}

ExceptionMatch thmwf_exception_match(const BraidWord& w)
{
    ExceptionMatch r;
    if (!is_positive(w) || w.strands != 4 || w.empty())
        return r;
    static const std::regex f1("2{2,}3+12{2,}1{2,}2321{2,}"), f2("2{2,}312{2,}1{2,}23+21{2,}");
    std::string s;
    for (int x : w.letters)
        s += char('0' + x);
    for (size_t k = 0; k < s.size(); ++k) {
        std::string rot = s.substr(k) + s.substr(0, k);
        for (int fam : {1, 2})
            if (std::regex_match(rot, fam == 1 ? f1 : f2)) {
                r.matched = true;
                r.family = fam;
                r.pattern = "[" + rot + "]";
                return r;
            }
    }
    return r;
}

} // namespace bf
