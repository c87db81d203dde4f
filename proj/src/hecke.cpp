#include "braidforge/hecke.hpp"

#include "braidforge/burau.hpp"
#include "braidforge/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bf {

namespace {

Poly qpow(int e) { return Poly::power(e, 'q'); }
Poly one_minus_qpow(int i) { return Poly(1) - qpow(i); }

Int factorial(int n)
{
    Int r = 1;
    for (int i = 2; i <= n; ++i)
        r = mul_ck(r, Int(i));
    return r;
}

Poly2 mono2(Int c, int dv, int dz) { return Poly2::monomial(c, dv, dz); }

Int to_int(const Rational& r)
{
    if (r.denominator() != 1)
        throw std::domain_error("non-integral coefficient in skein polynomial");
    return r.numerator();
}

Poly to_int_poly(const QPoly& p)
{
    Poly r;
    r.set_var(p.var());
    p.for_each([&](int d, const Rational& c) { r.add_term(d, to_int(c)); });
    return r;
}

Poly to_int_poly(const Poly& p) { return p; }

} // namespace

// ---------------------------------------------------------------- Young diagrams

YoungDiagram::YoungDiagram(std::vector<int> p) : parts(std::move(p))
{
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i] <= 0 || (i && parts[i] > parts[i - 1]))
            throw std::invalid_argument("not a partition");
}

int YoungDiagram::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

YoungDiagram YoungDiagram::transpose() const
{
    std::vector<int> t;
    for (int c = 0; c < first_row(); ++c) {
        int h = 0;
        for (int p : parts)
            if (p > c)
                ++h;
        t.push_back(h);
    }
    return YoungDiagram(t);
}

std::vector<int> YoungDiagram::hooks() const
{
    auto t = transpose();
    std::vector<int> h;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            h.push_back((parts[i] - j - 1) + (t.parts[size_t(j)] - int(i) - 1) + 1);
    return h;
}

int YoungDiagram::content_sum() const
{
    int s = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            s += j - int(i);
    return s;
}

Int YoungDiagram::dim() const
{
    Int den = 1;
    for (int h : hooks())
        den = mul_ck(den, Int(h));
    return factorial(size()) / den;
}

bool YoungDiagram::is_hook() const { return parts.size() <= 1 || parts[1] == 1; }

std::string to_string(const YoungDiagram& y)
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < y.parts.size(); ++i)
        os << (i ? "," : "") << y.parts[i];
    os << ')';
    return os.str();
}

std::vector<YoungDiagram> partitions(int n)
{
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxp) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- weights

Poly hecke_denominator(int n)
{
    Poly d(1);
    for (int i = 2; i <= n; ++i)
        d = d * one_minus_qpow(i);
    return d.set_var('q');
}

std::vector<WeightEntry> weight_table(int n)
{
    if (n < 1)
        throw std::invalid_argument("weight_table needs n >= 1");
    Poly full(1);
    for (int i = 1; i <= n; ++i)
        full = full * one_minus_qpow(i);
    std::vector<WeightEntry> out;
    for (auto& Y : partitions(n)) {
        Poly hk(1);
        for (int h : Y.hooks())
            hk = hk * one_minus_qpow(h);
        int shift = 0;
        std::vector<Poly> lam{Poly(1)};
        for (size_t i = 0; i < Y.parts.size(); ++i)
            for (int j = 0; j < Y.parts[i]; ++j) {
                shift += j;
                if (i == 0 && j == 0)
                    continue;
                int c = j - int(i);
                // multiply by (1 - lambda q^(1-c))
                std::vector<Poly> nx(lam.size() + 1);
                for (size_t a = 0; a < lam.size(); ++a) {
                    nx[a] += lam[a];
                    nx[a + 1] -= lam[a] * qpow(1 - c);
                }
                lam = std::move(nx);
            }
        Poly pref = exact_divide(full, hk) * qpow(shift);
        WeightEntry w;
        w.Y = Y;
        for (auto& l : lam)
            w.W.push_back((pref * l).set_var('q'));
        w.d = Y.dim();
        w.e = n * (n - 1) / 2 + Y.content_sum();
        out.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------- traces for n <= 4

Poly hecke_trace(const YoungDiagram& Y, const BraidWord& w)
{
    const int n = w.strands;
    if (Y.size() != n)
        throw std::invalid_argument("diagram size differs from strand count");
    int e = exponent_sum(w);
    Int sgn = (e % 2) ? -1 : 1;
    if (n == 1)
        return Poly(1);
    if (Y.is_hook()) {
        auto m = reduced_burau(w, 'q');
        return (Poly(sgn) * trace_exterior(m, Y.first_row() - 1)).set_var('q');
    }
    if (n == 4 && Y.parts == std::vector<int>{2, 2})
        return (Poly(sgn) * lmat_trace(reduced_burau(bar_hom(w), 'q'))).set_var('q');
    throw std::invalid_argument("no trace formula for " + to_string(Y) + " on " + std::to_string(n) + " strands");
}

template <class T>
Poly2 x_to_p(int n, int e, const std::vector<LaurentPoly<T>>& N, const LaurentPoly<T>& den)
{
    using P = LaurentPoly<T>;
    P qm1(T(1));
    for (int i = 1; i < n; ++i)
        qm1 = qm1 * (P::monomial(T(1), 2, 'q') - P(T(1)));
    const int base = e - n + 1; // lambda exponent times 2
    const Int sgn = ((n - 1) % 2) ? -1 : 1;
    Poly2 out;
    for (size_t j = 0; j < N.size(); ++j) {
        if (N[j].is_zero())
            continue;
        P m;
        try {
            m = exact_divide(N[j] * qm1, den);
        } catch (const std::domain_error&) {
            throw std::domain_error("skein weights leave a denominator (convention error)");
        }
        int A2 = base + 2 * int(j); // doubled lambda exponent
        // lambda^(A2/2) = v^(A2) q^(-A2/2): doubled v exponent 2*A2, doubled q exponent -A2
        Poly c = to_int_poly(m.shifted(-A2 - (n - 1)));
        c.set_var('q');
        Poly zpart = to_z_basis(Poly(sgn) * c);
        zpart.for_each([&](int dz, const Int& cf) { out.add_term(2 * A2, dz - 2 * (n - 1), cf); });
    }
    return out;
}

template Poly2 x_to_p<Int>(int, int, const std::vector<Poly>&, const Poly&);
template Poly2 x_to_p<Rational>(int, int, const std::vector<QPoly>&, const QPoly&);

Poly2 skein4(const BraidWord& w)
{
    const int n = w.strands;
    if (n > 4)
        throw std::invalid_argument("skein4 handles at most 4 strands");
    if (n == 1)
        return Poly2(1);
    auto tab = weight_table(n);
    std::vector<Poly> N(static_cast<size_t>(n));
    for (auto& we : tab) {
        Poly tr = hecke_trace(we.Y, w);
        for (size_t j = 0; j < we.W.size(); ++j)
            N[j] += we.W[j] * tr;
    }
    return x_to_p(n, exponent_sum(w), N, hecke_denominator(n));
}

Poly2 x_from_p(const Poly2& P)
{
    Poly2 X;
    X.set_vars('q', 'l');
    Poly zq = half_diff<Int>('q');
    for (auto& [k, c] : P.terms()) {
        auto [dv, dz] = k;
        if (dz < 0 || dz % 2)
            throw std::domain_error("X(q, lambda) is not a Laurent polynomial for this P");
        // v^(dv/2) = lambda^(dv/4) q^(dv/4): doubled exponents dv/2 each
        if (dv % 2)
            throw std::domain_error("odd doubled v exponent");
        Poly zp = zq.pow(dz / 2);
        zp.for_each([&](int dq, const Int& cz) { X.add_term(dq + dv / 2, dv / 2, mul_ck(c, cz)); });
    }
    return X;
}

// ---------------------------------------------------------------- skein oracle

Poly2 unknot_delta() { return mono2(1, -2, -2) - mono2(1, 2, -2); }

Poly2 homfly_oracle(const BraidWord& w, int budget)
{
    HomflyOracle o(budget);
    return o(w);
}

Poly2 HomflyOracle::operator()(const BraidWord& w)
{
    if (w.length() > budget_)
        throw std::runtime_error("skein oracle budget exceeded: " + std::to_string(w.length()) + " crossings > " +
                                 std::to_string(budget_));
    return eval(w.strands, w.letters);
}

Poly2 HomflyOracle::eval(int n, std::vector<int> letters)
{
    letters = cyclic_reduce(BraidWord(n, letters)).letters;
    if (n == 1)
        return Poly2(1);
    std::vector<int> cnt(size_t(n), 0);
    for (int g : letters)
        ++cnt[size_t(std::abs(g))];
    auto dropped = [&](int shift) {
        std::vector<int> l;
        for (int g : letters)
            l.push_back(g > 0 ? g - shift : g + shift);
        return l;
    };
    if (cnt[size_t(n - 1)] == 0)
        return unknot_delta() * eval(n - 1, letters);
    if (cnt[1] == 0)
        return unknot_delta() * eval(n - 1, dropped(1));
    for (int i = 2; i <= n - 2; ++i)
        if (cnt[size_t(i)] == 0) {
            std::vector<int> a, b;
            for (int g : letters)
                (std::abs(g) < i ? a : b).push_back(g > 0 ? (g < i ? g : g - i) : (-g < i ? g : g + i));
            return unknot_delta() * eval(i, a) * eval(n - i, b);
        }
    if (cnt[size_t(n - 1)] == 1) {
        std::vector<int> l;
        for (int g : letters)
            if (std::abs(g) != n - 1)
                l.push_back(g);
        return eval(n - 1, l);
    }
    if (cnt[1] == 1) {
        std::vector<int> l;
        for (int g : letters)
            if (std::abs(g) != 1)
                l.push_back(g > 0 ? g - 1 : g + 1);
        return eval(n - 1, l);
    }
    auto key = std::make_pair(n, min_rotation(BraidWord(n, letters)).letters);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    Poly2 r = descend(n, key.second);
    memo_.emplace(std::move(key), r);
    return r;
}

// Traverse the closure component by component from base points at the top; a crossing is bad when
// first met from below. Switching every bad crossing yields a descending diagram, i.e. an unlink.
Poly2 HomflyOracle::descend(int n, const std::vector<int>& letters)
{
    const int m = int(letters.size());
    std::vector<int> first(size_t(m), -1); // 1 over, 0 under
    std::vector<int> order;
    std::vector<char> seen(size_t(n), 0);
    int comps = 0;
    for (int p = 0; p < n; ++p) {
        if (seen[size_t(p)])
            continue;
        ++comps;
        int x = p;
        do {
            seen[size_t(x)] = 1;
            for (int k = 0; k < m; ++k) {
                int g = letters[size_t(k)], i = std::abs(g) - 1;
                if (x != i && x != i + 1)
                    continue;
                bool right = x == i;
                bool over = g > 0 ? right : !right;
                if (first[size_t(k)] < 0) {
                    first[size_t(k)] = over ? 1 : 0;
                    order.push_back(k);
                }
                x = right ? i + 1 : i;
            }
        } while (x != p);
    }
    Poly2 res, acc(1);
    std::vector<int> cur = letters;
    const Poly2 vz = mono2(1, 2, 2), mvinvz = mono2(-1, -2, 2);
    const Poly2 v2 = mono2(1, 4, 0), vm2 = mono2(1, -4, 0);
    for (int k : order) {
        if (first[size_t(k)])
            continue;
        std::vector<int> smooth;
        for (int j = 0; j < m; ++j)
            if (j != k)
                smooth.push_back(cur[size_t(j)]);
        Poly2 p0 = eval(n, smooth);
        if (cur[size_t(k)] > 0) {
            res += acc * vz * p0;
            acc = acc * v2;
        } else {
            res += acc * mvinvz * p0;
            acc = acc * vm2;
        }
        cur[size_t(k)] = -cur[size_t(k)];
    }
    res += acc * unknot_delta().pow(comps - 1);
    return res;
}

int mwf_bound(const Poly2& P)
{
    if (P.is_zero())
        throw std::domain_error("mwf bound of the zero polynomial");
    int s = P.dmax1() - P.dmin1();
    if (s % 4)
        throw std::domain_error("odd v-span");
    return s / 4 + 1;
}

// ---------------------------------------------------------------- six strands

namespace {

QPoly qq(std::initializer_list<std::pair<int, Rational>> terms)
{
    QPoly p;
    p.set_var('q');
    for (auto& [e, c] : terms)
        p.add_term(2 * e, c);
    return p;
}

QPoly zc_of(const QPoly& num, const QPoly& den, const QPoly& Z) { return exact_divide(Z * num, den); }

B6Tables build_b6()
{
    B6Tables t;
    t.Y = partitions(6);
    t.delta = {Poly(1), qpow(4), qpow(1), -qpow(1), -qpow(2), qpow(3), -qpow(3)};
    for (auto& p : t.delta)
        p.set_var('q');
    Poly Zi = (Poly(1) + qpow(1)) * (Poly(1) + qpow(2)) * (Poly(1) + qpow(1) + qpow(2));
    t.Z = Zi.set_var('q');
    QPoly Z = convert<Rational>(t.Z);
    // columns follow t.Y: 1^6, 21^4, 2211, 222, 31^3, 321, 33, 411, 42, 51, 6
    const int M[7][11] = {
        {1, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1},
        {0, 1, 3, 2, 2, 4, 1, 1, 1, 0, 0},
        {0, 1, 2, 1, 2, 2, 0, 1, 0, 0, 0},
        {0, 1, 2, 1, 3, 4, 1, 3, 2, 1, 0},
        {0, 0, 1, 1, 1, 4, 2, 2, 3, 1, 0},
        {0, 0, 0, 0, 1, 2, 1, 2, 2, 1, 0},
    };
    t.M.resize(11);
    for (int y = 0; y < 11; ++y)
        for (int i = 0; i < 7; ++i)
            t.M[size_t(y)][size_t(i)] = M[i][y];

    const Rational h(1, 2);
    QPoly one = qq({{0, 1}});
    QPoly p2 = qq({{0, 1}, {2, 1}});          // 1 + q^2
    QPoly p3 = qq({{0, 1}, {1, 1}, {2, 1}});  // 1 + q + q^2
    QPoly p1 = qq({{0, 1}, {1, 1}});          // 1 + q
    QPoly p23 = p2 * p3;
    auto E = [&](const QPoly& num, const QPoly& den, int param = 0) { return CiyEntry{zc_of(num, den, Z), param}; };
    auto Zero = [&]() { return CiyEntry{QPoly(), 0}; };
    t.zc.assign(11, {});
    auto set = [&](int i, std::array<CiyEntry, 11> row) {
        for (int y = 0; y < 11; ++y)
            t.zc[size_t(y)][size_t(i)] = row[size_t(y)];
    };
    // delta = 1
    set(0, {E(one, one), E(qq({{4, -1}}), p2), E(qq({{7, 1}}), p23), Zero(), Zero(), Zero(), Zero(), Zero(), Zero(),
            Zero(), Zero()});
    // delta = q^4
    set(1, {Zero(), Zero(), Zero(), Zero(), Zero(), Zero(), Zero(), Zero(), E(qq({{1, 1}}), p23), E(qq({{2, -1}}), p2),
            E(qq({{4, 1}}), one)});
    // delta = q
    set(2, {Zero(), E(qq({{0, h}}), one), E(qq({{1, h}, {2, -h}}), one), E(qq({{1, 1}, {3, h}}), one),
            E(qq({{2, -h}, {4, -1}}), p2), E(qq({{1, h}, {2, -2}, {3, h}}), one, -1), Zero(),
            E(qq({{6, h}}), p2), E(qq({{6, 1}}), p3), Zero(), Zero()});
    // delta = -q
    {
        // (1-q)^2 q / 2 - q^2/(1+q)
        QPoly a = qq({{1, h}, {2, -1}, {3, h}}) * p1 - qq({{2, 1}});
        set(3, {Zero(), E(qq({{0, h}}), one), E(qq({{1, h}, {2, -h}}), one), E(qq({{3, h}}), one),
                E(qq({{2, -h}, {4, -1}}), p2), E(a, p1, -1), Zero(), E(qq({{6, h}}), p2), Zero(), Zero(), Zero()});
    }
    // delta = -q^2
    set(4, {Zero(), E(one, p2), E(qq({{1, 1}, {2, -1}, {3, 1}}), p2), E(qq({{2, -1}}), one), E(qq({{2, -1}}), one),
            E(qq({{1, 1}, {2, -1}, {3, 1}}), one), E(qq({{2, -1}}), one), E(qq({{2, -1}}), one),
            E(qq({{3, 1}, {4, -1}, {5, 1}}), p2), E(qq({{6, 1}}), p2), Zero()});
    // delta = q^3
    set(5, {Zero(), Zero(), E(one, p3), Zero(), E(qq({{0, h}}), p2), CiyEntry{QPoly(), 1}, E(qq({{1, h}, {3, 1}}), one),
            E(qq({{2, -1}, {4, -h}}), p2), E(qq({{2, -h}, {3, h}}), one), E(qq({{4, h}}), one), Zero()});
    // delta = -q^3
    set(6, {Zero(), Zero(), Zero(), Zero(), E(qq({{0, h}}), p2), E(qq({{2, 1}}), p1, 1), E(qq({{1, h}}), one),
            E(qq({{2, -1}, {4, -h}}), p2), E(qq({{2, -h}, {3, h}}), one), E(qq({{4, h}}), one), Zero()});

    for (auto& we : weight_table(6)) {
        t.d.push_back(we.d);
        t.e.push_back(we.e);
        t.r.push_back(int(Int(we.e) * we.d / 30));
    }
    return t;
}

QPoly delta_pow(const Poly& d, int k)
{
    // d is +-q^j
    int j = d.dmin() / 2;
    Int c = d.min_cf();
    Int s = (k % 2 && c < 0) ? -1 : 1;
    return QPoly::monomial(Rational(s), 2 * j * k, 'q');
}

} // namespace

const B6Tables& b6_tables()
{
    static const B6Tables t = build_b6();
    return t;
}

const std::vector<WeightEntry>& b6_weights()
{
    static const std::vector<WeightEntry> w = weight_table(6);
    return w;
}

BraidWord beta_kl(int k, int l)
{
    BraidWord a(6, {4, 3, 5, 4});
    BraidWord ap = power(BraidWord(6, {2, 1, 3, 2}), k);
    BraidWord ft = power(full_twist(6), l);
    return concat(concat(a, ap), ft);
}

std::vector<QPoly> trace_identity_residuals()
{
    auto& t = b6_tables();
    QPoly Z = convert<Rational>(t.Z);
    std::vector<QPoly> out;
    for (size_t y = 0; y < t.Y.size(); ++y) {
        QPoly s;
        int par = 0;
        for (size_t i = 0; i < 7; ++i) {
            s += t.zc[y][i].base;
            par += t.zc[y][i].param;
            s -= Z * convert<Rational>(t.delta[i]) * QPoly(Rational(t.M[y][i]));
        }
        if (par)
            throw std::logic_error("undetermined entry survives in the trace identity");
        out.push_back(s.set_var('q'));
    }
    return out;
}

QPoly b6_trace(size_t y, int k, int l, const QPoly& c6)
{
    auto& t = b6_tables();
    QPoly Z = convert<Rational>(t.Z);
    QPoly s;
    for (size_t i = 0; i < 7; ++i) {
        auto& c = t.zc[y][i];
        QPoly zc = c.base;
        if (c.param)
            zc += QPoly(Rational(c.param)) * Z * c6;
        if (!zc.is_zero())
            s += zc * delta_pow(t.delta[i], k);
    }
    return (s * QPoly::monomial(Rational(1), 2 * l * t.e[y], 'q')).set_var('q');
}

Poly2 b6_skein(int k, int l, const QPoly& c6)
{
    auto& t = b6_tables();
    auto& W = b6_weights();
    std::vector<QPoly> N(6);
    for (size_t y = 0; y < t.Y.size(); ++y) {
        QPoly tr = b6_trace(y, k, l, c6);
        for (size_t j = 0; j < W[y].W.size(); ++j)
            N[j] += convert<Rational>(W[y].W[j]) * tr;
    }
    QPoly den = convert<Rational>(t.Z * hecke_denominator(6));
    return x_to_p(6, 4 + 4 * k + 30 * l, N, den);
}

namespace {

// grouped coefficient: for odd k, delta_4 = -delta_3 and delta_7 = -delta_6
QPoly grouped(size_t y, size_t i)
{
    auto& t = b6_tables();
    auto& c = t.zc[y];
    auto chk = [](const CiyEntry& a, const CiyEntry& b) {
        if (a.param != b.param)
            throw std::logic_error("undetermined table entry does not cancel");
        return a.base - b.base;
    };
    if (i == 2)
        return chk(c[2], c[3]);
    if (i == 5)
        return chk(c[5], c[6]);
    if (c[i].param)
        throw std::logic_error("undetermined table entry does not cancel");
    return c[i].base;
}

} // namespace

QPoly b6_coefficient(int a, int m)
{
    if (a < 0 || m < 0 || m > 5)
        throw std::invalid_argument("b6_coefficient needs a >= 0 and 0 <= m <= 5");
    auto& t = b6_tables();
    auto& W = b6_weights();
    const int k = 6 * a - 1, l = -2 * a;
    QPoly s;
    for (size_t y = 0; y < t.Y.size(); ++y) {
        if (size_t(m) >= W[y].W.size())
            continue;
        QPoly wm = convert<Rational>(W[y].W[size_t(m)]);
        QPoly tw = QPoly::monomial(Rational(1), 2 * l * t.e[y], 'q');
        for (size_t i : {0, 1, 2, 4, 5}) {
            QPoly g = grouped(y, i);
            if (!g.is_zero())
                s += g * delta_pow(t.delta[i], k) * tw * wm;
        }
    }
    return s.set_var('q');
}

int b6_nonzero_grouped()
{
    int n = 0;
    for (size_t y = 0; y < b6_tables().Y.size(); ++y)
        for (size_t i : {0, 1, 2, 4, 5})
            if (!grouped(y, i).is_zero())
                ++n;
    return n;
}

OneHookReport verify_onehook_traces(int k)
{
    OneHookReport rep;
    rep.k = k;
    auto& t = b6_tables();
    BraidWord b = beta_kl(k, 0);
    auto m = reduced_burau(b, 'q');
    int e = exponent_sum(b);
    QPoly Z = convert<Rational>(t.Z);
    for (size_t y = 0; y < t.Y.size(); ++y) {
        if (!t.Y[y].is_hook())
            continue;
        Poly tr = trace_exterior(m, t.Y[y].first_row() - 1);
        if (e % 2)
            tr = -tr;
        QPoly lhs = Z * convert<Rational>(tr);
        QPoly rhs = b6_trace(y, k, 0);
        if (lhs != rhs) {
            rep.ok = false;
            rep.mismatches.push_back(to_string(t.Y[y]));
        }
    }
    return rep;
}

} // namespace bf
