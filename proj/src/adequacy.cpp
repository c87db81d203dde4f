#include "braidforge/adequacy.hpp"

#include "braidforge/parallel.hpp"
#include "braidforge/xuform.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bf {

namespace {

// vertical = keep strands; horizontal = cup/cap
bool vertical_splice(int letter, StateKind kind) { return (letter > 0) == (kind == StateKind::A); }

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[size_t(x)] != x)
            x = p[size_t(x)] = p[size_t(p[size_t(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a), b = find(b);
        if (a == b)
            return false;
        p[size_t(a)] = b;
        return true;
    }
};

// loops of the state where crossing j is vertical iff bit j of mask is set
int count_loops(int n, const std::vector<int>& ls, unsigned long long vmask)
{
    int c = int(ls.size());
    if (c == 0)
        return n;
    UnionFind uf(n * c);
    int comps = n * c;
    auto seg = [&](int p, int j) { return (j % c) * n + p; };
    for (int j = 0; j < c; ++j) {
        int i = std::abs(ls[size_t(j)]) - 1;
        for (int p = 0; p < n; ++p)
            if (p != i && p != i + 1)
                comps -= uf.unite(seg(p, j), seg(p, j + 1));
        if ((vmask >> j) & 1) {
            comps -= uf.unite(seg(i, j), seg(i, j + 1));
            comps -= uf.unite(seg(i + 1, j), seg(i + 1, j + 1));
        } else {
            comps -= uf.unite(seg(i, j), seg(i + 1, j));
            comps -= uf.unite(seg(i, j + 1), seg(i + 1, j + 1));
        }
    }
    return comps;
}

bool connected_diagram(const BraidWord& w)
{
    std::set<int> g;
    for (int l : w.letters)
        g.insert(std::abs(l));
    return int(g.size()) == w.strands - 1;
}

} // namespace

StateGraph state(const BraidWord& w, StateKind kind)
{
    const int n = w.strands, c = w.length();
    StateGraph s;
    if (c == 0) {
        s.loops = n;
        s.order.assign(static_cast<size_t>(n), {});
        return s;
    }
    // ports: 2 * segment + (0 top, 1 bottom); segment (p, j) sits just above crossing j
    auto seg = [&](int p, int j) { return (j % c) * n + p; };
    auto top = [](int sg) { return 2 * sg; };
    auto bot = [](int sg) { return 2 * sg + 1; };
    const int P = 2 * n * c;
    std::vector<int> partner(static_cast<size_t>(P), -1), event(static_cast<size_t>(P), -1);
    auto link = [&](int a, int b, int ev) {
        partner[size_t(a)] = b;
        partner[size_t(b)] = a;
        event[size_t(a)] = event[size_t(b)] = ev;
    };
    for (int j = 0; j < c; ++j) {
        int l = w.letters[size_t(j)], i = std::abs(l) - 1;
        for (int p = 0; p < n; ++p)
            if (p != i && p != i + 1)
                link(bot(seg(p, j)), top(seg(p, j + 1)), -1);
        if (vertical_splice(l, kind)) {
            link(bot(seg(i, j)), top(seg(i, j + 1)), j);
            link(bot(seg(i + 1, j)), top(seg(i + 1, j + 1)), j);
        } else {
            link(bot(seg(i, j)), bot(seg(i + 1, j)), j);
            link(top(seg(i, j + 1)), top(seg(i + 1, j + 1)), j);
        }
    }
    std::vector<int> loop_of(static_cast<size_t>(P), -1);
    std::vector<std::vector<int>> ends(static_cast<size_t>(c));
    for (int start = 0; start < P; ++start) {
        if (loop_of[size_t(start)] >= 0)
            continue;
        int id = s.loops++;
        s.order.emplace_back();
        int x = start;
        do {
            loop_of[size_t(x)] = id;
            int y = x ^ 1; // along the segment
            loop_of[size_t(y)] = id;
            if (event[size_t(y)] >= 0) {
                s.order.back().push_back(event[size_t(y)]);
                ends[size_t(event[size_t(y)])].push_back(id);
            }
            x = partner[size_t(y)];
        } while (x != start);
    }
    for (int j = 0; j < c; ++j) {
        auto& e = ends[size_t(j)];
        std::pair<int, int> t{std::min(e[0], e[1]), std::max(e[0], e[1])};
        s.traces.push_back(t);
        ++s.multiplicity[t];
    }
    return s;
}

bool is_adequate(const BraidWord& w, StateKind kind)
{
    for (auto& [a, b] : state(w, kind).traces)
        if (a == b)
            return false;
    return true;
}

bool b_adequate_3braid_criterion(const BraidWord& w)
{
    if (w.strands != 3)
        throw std::invalid_argument("criterion is for 3-braids");
    if (!(cyclic_reduce(w) == w))
        throw std::invalid_argument("word is not cyclically reduced");
    if (is_negative(w))
        return true;
    // a generator met once, positively, is a kink in the closure; its B-splice traces a loop to itself
    for (int g : {1, 2}) {
        int n = 0, last = 0;
        for (int l : w.letters)
            if (std::abs(l) == g)
                ++n, last = l;
        if (n == 1 && last > 0)
            return false;
    }
    if (contains_subword(w, {1, 2, 1}) || contains_subword(w, {2, 1, 2}))
        return false;
    auto syl = syllable_decomposition(w, true);
    for (size_t k = 0; k + 1 < syl.size(); ++k)
        if (syl[k].index == syl[k + 1].index)
            throw std::invalid_argument("Schreier form does not alternate");
    size_t m = syl.size();
    for (size_t k = 0; k < m; ++k)
        if (syl[k].exponent < 0 && (syl[(k + m - 1) % m].exponent < 0 || syl[(k + 1) % m].exponent < 0))
            return false;
    return true;
}

AGraphSummary graph_summary(const StateGraph& s)
{
    AGraphSummary g;
    std::set<std::pair<int, int>> edges, multi;
    for (auto& [k, m] : s.multiplicity) {
        if (k.first == k.second)
            continue;
        edges.insert(k);
        if (m >= 2)
            multi.insert(k);
    }
    g.chi_g = s.loops - int(edges.size());
    for (auto& [a, b] : edges)
        for (int x = b + 1; x < s.loops; ++x)
            if (edges.count({a, x}) && edges.count({b, x}))
                ++g.triangles;

    std::vector<std::pair<int, int>> mv(multi.begin(), multi.end());
    int ig_edges = 0;
    for (size_t u = 0; u < mv.size(); ++u)
        for (size_t v = u + 1; v < mv.size(); ++v) {
            auto [a1, b1] = mv[u];
            auto [a2, b2] = mv[v];
            int shared = -1;
            for (int x : {a1, b1})
                if (x == a2 || x == b2)
                    shared = x;
            if (shared < 0)
                continue;
            // traces of the two multiple edges along the shared loop: do they alternate?
            std::vector<int> labels;
            for (int j : s.order[size_t(shared)]) {
                auto t = s.traces[size_t(j)];
                if (t == mv[u])
                    labels.push_back(0);
                else if (t == mv[v])
                    labels.push_back(1);
            }
            int runs = 0;
            for (size_t k = 0; k < labels.size(); ++k)
                runs += labels[k] != labels[(k + 1) % labels.size()];
            if (runs >= 4)
                ++ig_edges;
        }
    g.chi_ig = int(mv.size()) - ig_edges;
    return g;
}

EdgeCoefficients jones_edge_coefficients(const BraidWord& w, StateKind kind)
{
    if (kind == StateKind::B)
        return jones_edge_coefficients(mirror(w), StateKind::A);
    if (!connected_diagram(w))
        throw std::invalid_argument("diagram is not connected");
    StateGraph s = state(w, StateKind::A);
    for (auto& [a, b] : s.traces)
        if (a == b)
            throw std::invalid_argument("diagram is not A-adequate");
    auto g = graph_summary(s);
    EdgeCoefficients e;
    Int m = 2 - g.chi_g;
    e.v0v1 = g.chi_g - 1;
    e.v0v2 = m * (m - 1) / 2 + g.chi_ig - g.triangles;
    return e;
}

EdgeCoefficients edge_coefficients_of(const Poly& V, StateKind kind)
{
    EdgeCoefficients e;
    if (kind == StateKind::A) {
        int d = V.dmin();
        e.v0v1 = V.coeff(d) * V.coeff(d + 2);
        e.v0v2 = V.coeff(d) * V.coeff(d + 4);
    } else {
        int d = V.dmax();
        e.v0v1 = V.coeff(d) * V.coeff(d - 2);
        e.v0v2 = V.coeff(d) * V.coeff(d - 4);
    }
    return e;
}

Poly bracket_oracle(const BraidWord& w, int max_crossings)
{
    const int c = w.length(), n = w.strands;
    if (c > max_crossings || c > 40)
        throw std::runtime_error("bracket state sum over budget: " + std::to_string(c) + " crossings");
    // cnt[a][loops]: states with a A-splices and the given loop count
    std::vector<std::vector<Int>> cnt(static_cast<size_t>(c + 1), std::vector<Int>(static_cast<size_t>(n + c + 1), 0));
    std::mutex mu;
    unsigned long long total = 1ULL << c;
    size_t chunks = std::min<unsigned long long>(total, 64);
    unsigned long long per = total / chunks;
    unsigned long long posmask = 0;
    for (int j = 0; j < c; ++j)
        if (w.letters[size_t(j)] > 0)
            posmask |= 1ULL << j;
    parallel_for(chunks, [&](size_t k) {
        auto local = std::vector<std::vector<Int>>(cnt.size(), std::vector<Int>(cnt[0].size(), 0));
        for (unsigned long long a = k * per; a < (k + 1) * per; ++a) {
            // bit set in a = A-splice; vertical iff A on a positive crossing or B on a negative one
            unsigned long long v = ~(a ^ posmask) & (total - 1);
            int loops = count_loops(n, w.letters, v);
            ++local[size_t(__builtin_popcountll(a))][size_t(loops)];
        }
        std::lock_guard lk(mu);
        for (size_t i = 0; i < cnt.size(); ++i)
            for (size_t j = 0; j < cnt[i].size(); ++j)
                cnt[i][j] += local[i][j];
    });
    // bracket in A, as exponent -> coefficient
    std::map<int, Int> br;
    std::map<int, Int> dpow{{0, 1}}; // delta^k, delta = -A^2 - A^-2
    std::vector<std::map<int, Int>> dpows{dpow};
    for (int k = 1; k <= n + c; ++k) {
        std::map<int, Int> nx;
        for (auto& [e, x] : dpows.back()) {
            nx[e + 2] -= x;
            nx[e - 2] -= x;
        }
        dpows.push_back(nx);
    }
    for (int a = 0; a <= c; ++a)
        for (int l = 1; l <= n + c; ++l) {
            Int m = cnt[size_t(a)][size_t(l)];
            if (!m)
                continue;
            for (auto& [e, x] : dpows[size_t(l - 1)])
                br[e + a - (c - a)] += m * x;
        }
    int wr = exponent_sum(w);
    // (-A^3)^-w, then A^m -> t^(-m/4), doubled exponent -m/2
    Poly V;
    for (auto& [e, x] : br) {
        if (!x)
            continue;
        int m = e - 3 * wr;
        if (m % 2)
            throw std::logic_error("odd A exponent in bracket");
        V.add_term(-m / 2, (wr % 2) ? -x : x);
    }
    return V;
}

namespace {

bool semiadequate_rotation(const BraidWord& u, std::optional<BraidWord>& out)
{
    if (u.empty())
        return false;
    for (int r = 0; r < u.length(); ++r) {
        BraidWord x(u.strands, {});
        x.letters.assign(u.letters.begin() + r, u.letters.end());
        x.letters.insert(x.letters.end(), u.letters.begin(), u.letters.begin() + r);
        if (is_adequate(x, StateKind::A) || is_adequate(x, StateKind::B)) {
            out = x;
            return true;
        }
    }
    return false;
}

// words delta^(2d) s1^-a1 s2^b1 ... s1^-an s2^bn (and the short exceptional ones) up to a length,
// tested for conjugacy to w through the Xu form
std::optional<BraidWord> murasugi_search(const BraidWord& w, int max_total)
{
    const XuForm target = xu_normal_form(w);
    const int e = exponent_sum(w);
    std::optional<BraidWord> out;
    auto test = [&](const std::vector<int>& l) {
        BraidWord x(3, l);
        if (!(is_adequate(x, StateKind::A) || is_adequate(x, StateKind::B)))
            return false;
        if (!(xu_normal_form(x) == target))
            return false;
        out = x;
        return true;
    };
    for (int d = 0; 6 * std::abs(d) <= max_total; d = d > 0 ? -d : 1 - d) {
        std::vector<int> head;
        for (int i = 0; i < 3 * std::abs(d); ++i)
            head.insert(head.end(), d > 0 ? std::initializer_list<int>{1, 2} : std::initializer_list<int>{-1, -2});
        const int sum = e - 6 * d, room = max_total - int(head.size());
        for (int m : {0, -1, -2, -3}) {
            auto l = head;
            if (m == 0) {
                if (std::abs(sum) > room)
                    continue;
                l.insert(l.end(), size_t(std::abs(sum)), sum >= 0 ? 2 : -2);
            } else {
                if (sum != m - 1)
                    continue;
                l.insert(l.end(), size_t(-m), -1);
                l.push_back(-2);
            }
            if (test(l))
                return out;
        }
        std::vector<int> cur;
        std::function<bool(int, int)> rec = [&](int used, int s) -> bool {
            if (!cur.empty() && cur.back() > 0 && s == sum) {
                auto l = head;
                for (size_t k = 0; k < cur.size(); ++k)
                    l.insert(l.end(), size_t(std::abs(cur[k])), k % 2 ? 2 : -1);
                if (test(l))
                    return true;
            }
            bool neg = cur.size() % 2 == 0;
            for (int a = 1; used + a <= room; ++a) {
                // remaining letters have to be able to close the sum
                int ns = s + (neg ? -a : a), left = room - used - a;
                if (std::abs(sum - ns) > left)
                    continue;
                cur.push_back(neg ? -a : a);
                if (rec(used + a, ns))
                    return true;
                cur.pop_back();
            }
            return false;
        };
        if (rec(0, 0))
            return out;
    }
    return std::nullopt;
}

} // namespace

std::optional<BraidWord> semiadequate_conjugate(const BraidWord& w, int max_len)
{
    std::optional<BraidWord> hit;
    // 3-braids: try the super summit set first, written out in Artin letters
    if (w.strands == 3) {
        auto u = cyclic_reduce(free_reduce(w));
        if (semiadequate_rotation(u, hit))
            return hit;
        for (auto& x : super_summit_set(dual_nf(u), 5000)) {
            std::vector<int> b;
            for (int l : dual_letters(x)) {
                if (std::abs(l) == 4)
                    b.insert(b.end(), l > 0 ? std::initializer_list<int>{2, 1} : std::initializer_list<int>{-1, -2});
                else
                    b.push_back(l);
            }
            if (semiadequate_rotation(cyclic_reduce(free_reduce(band_to_artin(BandWord{b}))), hit))
                return hit;
        }
    }
    std::vector<int> gens;
    for (int i = 1; i < w.strands; ++i)
        gens.insert(gens.end(), {i, -i});
    std::vector<int> cur;
    std::optional<BraidWord> found;
    std::function<void()> rec = [&] {
        if (found)
            return;
        BraidWord c(w.strands, cur);
        BraidWord u = cyclic_reduce(free_reduce(concat(concat(c, w), inverse(c))));
        if (is_adequate(u, StateKind::A) || is_adequate(u, StateKind::B)) {
            found = u;
            return;
        }
        if (int(cur.size()) == max_len)
            return;
        for (int g : gens) {
            if (!cur.empty() && cur.back() == -g)
                continue;
            cur.push_back(g);
            rec();
            cur.pop_back();
        }
    };
    rec();
    if (!found && w.strands == 3) {
        auto u = cyclic_reduce(free_reduce(w));
        return murasugi_search(u, u.length() + 6);
    }
    return found;
}

} // namespace bf
