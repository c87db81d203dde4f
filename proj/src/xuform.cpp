#include "braidforge/xuform.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bf {

namespace {

int md3(int x) { return ((x - 1) % 3 + 3) % 3 + 1; }

void shift(std::vector<int>& atoms, int by)
{
    for (int& a : atoms)
        a = md3(a + by);
}

// a_y a_x = delta exactly when x = y - 1
void mul_atom(DualNF& x, int a)
{
    if (!x.atoms.empty() && a == md3(x.atoms.back() - 1)) {
        x.atoms.pop_back();
        shift(x.atoms, 1);
        ++x.inf;
    } else {
        x.atoms.push_back(a);
    }
}

// a_x^-1 = delta^-1 a_{x+1}
void mul_atom_inv(DualNF& x, int a)
{
    shift(x.atoms, -1);
    --x.inf;
    mul_atom(x, md3(a + 1));
}

void mul_delta(DualNF& x, int k)
{
    shift(x.atoms, k);
    x.inf += k;
}

void check_three(const BraidWord& w)
{
    if (w.strands != 3)
        throw std::invalid_argument("band calculus needs a 3-braid");
}

void check_nonsplit(const BraidWord& w)
{
    check_three(w);
    bool g1 = false, g2 = false;
    for (int l : w.letters)
        (std::abs(l) == 1 ? g1 : g2) = true;
    if (!g1 || !g2)
        throw std::invalid_argument("split closure: a generator is missing");
}

std::vector<int> flip_letters(const std::vector<int>& ls)
{
    std::vector<int> r;
    r.reserve(ls.size());
    for (int l : ls) {
        int a = std::abs(l);
        int f = a == 4 ? 4 : (a == 3 ? 3 : 3 - a);
        r.push_back(l > 0 ? -f : f);
    }
    return r;
}

DualNF conj(const DualNF& x, int s)
{
    auto ls = dual_letters(x);
    ls.push_back(s);
    return dual_mul(dual_nf(std::vector<int>{-s}), ls);
}

DualNF canonical(const DualNF& x)
{
    auto sss = super_summit_set(x);
    return *std::min_element(sss.begin(), sss.end());
}

} // namespace

BraidWord band_to_artin(const BandWord& b)
{
    std::vector<int> out;
    for (int l : b.letters) {
        int a = std::abs(l);
        if (a < 1 || a > 3)
            throw std::invalid_argument("band letter out of range");
        if (a == 3) {
            int s = l > 0 ? 1 : -1;
            out.insert(out.end(), {2, s, -2});
        } else {
            out.push_back(l);
        }
    }
    return BraidWord(3, out);
}

BandWord artin_to_band(const BraidWord& w)
{
    check_three(w);
    return BandWord{w.letters};
}

std::string to_string(const BandWord& b)
{
    std::string s = "band:[";
    for (int l : b.letters) {
        if (l < 0)
            s += '-';
        s += char('0' + std::abs(l));
    }
    return s + "]";
}

BandWord parse_band(const std::string& text)
{
    std::string t = text;
    if (t.rfind("band:", 0) == 0)
        t = t.substr(5);
    BandWord b{parse_letters(t)};
    for (int l : b.letters)
        if (std::abs(l) > 3)
            throw ParseError("band letter out of range", 0);
    return b;
}

int exponent_sum(const BandWord& b)
{
    int s = 0;
    for (int l : b.letters)
        s += l > 0 ? 1 : -1;
    return s;
}

DualNF dual_mul(DualNF x, const std::vector<int>& letters)
{
    for (int l : letters) {
        int a = std::abs(l);
        if (a == 4)
            mul_delta(x, l > 0 ? 1 : -1);
        else if (a >= 1 && a <= 3)
            l > 0 ? mul_atom(x, a) : mul_atom_inv(x, a);
        else
            throw std::invalid_argument("bad dual letter");
    }
    return x;
}

DualNF dual_nf(const std::vector<int>& letters) { return dual_mul(DualNF{}, letters); }

DualNF dual_nf(const BraidWord& w)
{
    check_three(w);
    return dual_nf(w.letters);
}

std::vector<int> dual_letters(const DualNF& x)
{
    std::vector<int> r(static_cast<size_t>(std::abs(x.inf)), x.inf > 0 ? 4 : -4);
    r.insert(r.end(), x.atoms.begin(), x.atoms.end());
    return r;
}

// conjugate by delta^inf A_1 delta^-inf
DualNF dual_cycle(const DualNF& x)
{
    if (x.atoms.empty())
        return x;
    return conj(x, md3(x.atoms.front() - x.inf));
}

// A_r X A_r^-1
DualNF dual_decycle(const DualNF& x)
{
    if (x.atoms.empty())
        return x;
    return conj(x, -x.atoms.back());
}

DualNF dual_flip(const DualNF& x) { return dual_nf(flip_letters(dual_letters(x))); }

std::vector<DualNF> super_summit_set(const DualNF& start, size_t budget)
{
    DualNF x = start;
    for (;;) {
        // climb: cycling raises inf, decycling lowers sup
        bool changed = true;
        while (changed) {
            changed = false;
            int tries = 3 * int(x.atoms.size()) + 6;
            DualNF y = x;
            for (int i = 0; i < tries && !changed; ++i) {
                y = dual_cycle(y);
                if (y.inf > x.inf) {
                    x = y;
                    changed = true;
                }
            }
            y = x;
            for (int i = 0; i < tries && !changed; ++i) {
                y = dual_decycle(y);
                if (y.sup() < x.sup() && y.inf >= x.inf) {
                    x = y;
                    changed = true;
                }
            }
        }
        std::set<DualNF> seen{x};
        std::deque<DualNF> queue{x};
        bool restart = false;
        while (!queue.empty() && !restart) {
            DualNF cur = queue.front();
            queue.pop_front();
            for (int s : {1, 2, 3, 4}) {
                DualNF y = conj(cur, s);
                if (y.inf > x.inf || (y.inf == x.inf && y.sup() < x.sup())) {
                    x = y;
                    restart = true;
                    break;
                }
                if (y.inf == x.inf && y.sup() == x.sup() && seen.insert(y).second) {
                    if (seen.size() > budget)
                        throw std::runtime_error("super summit set budget exceeded");
                    queue.push_back(y);
                }
            }
        }
        if (!restart)
            return {seen.begin(), seen.end()};
    }
}

BandWord XuForm::band_word() const
{
    std::vector<int> ls;
    if (kind == 'B') {
        for (auto it = L.rbegin(); it != L.rend(); ++it)
            ls.push_back(-*it);
        ls.insert(ls.end(), R.begin(), R.end());
        return BandWord{ls};
    }
    for (int i = 0; i < k; ++i)
        ls.insert(ls.end(), {2, 1});
    ls.insert(ls.end(), R.begin(), R.end());
    if (negative)
        ls = flip_letters(ls);
    return BandWord{ls};
}

XuForm xu_normal_form(const BraidWord& w)
{
    check_three(w);
    DualNF c = canonical(dual_nf(w));
    XuForm f;
    if (c.inf >= 0) {
        f.kind = 'A';
        f.k = c.inf;
        f.R = c.atoms;
        f.inf = c.inf;
        f.sup = c.sup();
        f.band_length = 2 * c.inf + int(c.atoms.size());
    } else if (c.sup() > 0) {
        f.kind = 'B';
        size_t m = size_t(-c.inf);
        std::vector<int> head(c.atoms.begin(), c.atoms.begin() + long(m));
        // L = (delta^-m A_1..A_m)^-1 = A_m^-1 .. A_1^-1 delta^m
        std::vector<int> ls;
        for (auto it = head.rbegin(); it != head.rend(); ++it)
            ls.push_back(-*it);
        ls.insert(ls.end(), m, 4);
        DualNF l = dual_nf(ls);
        if (l.inf != 0 || l.atoms.size() != m)
            throw std::logic_error("L is not a positive word");
        f.L = l.atoms;
        f.R.assign(c.atoms.begin() + long(m), c.atoms.end());
        f.inf = c.inf;
        f.sup = c.sup();
        f.band_length = int(c.atoms.size());
    } else {
        DualNF p = canonical(dual_flip(c));
        f.kind = 'A';
        f.negative = true;
        f.k = p.inf;
        f.R = p.atoms;
        f.inf = c.inf;
        f.sup = c.sup();
        f.band_length = 2 * p.inf + int(p.atoms.size());
    }
    return f;
}

std::string to_string(const XuForm& x)
{
    auto word = [](const std::vector<int>& v) {
        std::string s = "[";
        for (int a : v)
            s += char('0' + a);
        return s + "]";
    };
    std::ostringstream os;
    if (x.kind == 'B')
        os << "B L=" << word(x.L) << " R=" << word(x.R);
    else
        os << (x.negative ? "A- k=" : "A k=") << x.k << " R=" << word(x.R);
    return os.str();
}

EulerData euler_char(const BraidWord& w)
{
    XuForm f = xu_normal_form(w);
    EulerData d;
    d.chi = 3 - f.band_length;
    d.components = components(w);
    d.genus2 = 2 - d.components - d.chi;
    return d;
}

bool is_strongly_quasipositive(const BraidWord& w)
{
    check_nonsplit(w);
    XuForm f = xu_normal_form(w);
    return f.kind == 'A' && !f.negative;
}

// an inf-0 super summit element is cyclically left-weighted, so its syllables wrap around
// 1 -> 2 -> 3 a multiple of three times: exactly the extensions of (123)^k
bool is_fibered(const BraidWord& w)
{
    check_nonsplit(w);
    XuForm f = xu_normal_form(w);
    if (f.kind == 'B')
        return true;
    return f.k > 0;
}

BraidWord birman_dual(const BraidWord& w)
{
    check_three(w);
    int e = exponent_sum(w);
    if (e % 6 != 0)
        throw std::invalid_argument("Birman dual needs exponent sum divisible by 6");
    return concat(inverse(w), power(BraidWord(3, {1, 2, 1}), 2 * e / 3));
}

BandBfsResult bfs_minimal_band(const BandWord& b, size_t budget)
{
    // length-2 rewrites from a2 a1 = a1 a3 = a3 a2 and their consequences
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> rw;
    const std::pair<int, int> pos[3] = {{2, 1}, {1, 3}, {3, 2}};
    for (auto [x, y] : pos)
        for (auto [z, v] : pos) {
            if (x == z)
                continue;
            rw[{x, y}].push_back({z, v});
            rw[{-y, -x}].push_back({-v, -z});
            rw[{-z, x}].push_back({v, -y});
        }
    auto canon = [](std::vector<int> w) {
        if (w.empty())
            return w;
        std::vector<int> best = w;
        for (size_t i = 1; i < w.size(); ++i) {
            std::rotate(w.begin(), w.begin() + 1, w.end());
            best = std::min(best, w);
        }
        return best;
    };
    for (int l : b.letters)
        if (l == 0 || std::abs(l) > 3)
            throw std::invalid_argument("band letter out of range");

    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    auto start = canon(b.letters);
    seen.insert(start);
    queue.push_back(start);
    BandBfsResult res{int(start.size()), BandWord{start}, 0};
    auto visit = [&](std::vector<int> w) {
        w = canon(std::move(w));
        if (!seen.insert(w).second)
            return;
        if (seen.size() > budget)
            throw std::runtime_error("band search budget exceeded");
        if (int(w.size()) < res.length)
            res = {int(w.size()), BandWord{w}, 0};
        queue.push_back(std::move(w));
    };
    while (!queue.empty()) {
        auto w = std::move(queue.front());
        queue.pop_front();
        size_t n = w.size();
        if (n < 2)
            continue;
        for (size_t i = 0; i < n; ++i) {
            size_t j = (i + 1) % n;
            int x = w[i], y = w[j];
            if (x == -y) {
                std::vector<int> r;
                for (size_t t = 2; t < n; ++t)
                    r.push_back(w[(i + t) % n]);
                visit(r);
            }
            auto it = rw.find({x, y});
            if (it == rw.end())
                continue;
            for (auto [p, q] : it->second) {
                std::vector<int> r;
                r.push_back(p);
                r.push_back(q);
                for (size_t t = 2; t < n; ++t)
                    r.push_back(w[(i + t) % n]);
                visit(r);
            }
        }
    }
    res.states = seen.size();
    return res;
}

} // namespace bf
