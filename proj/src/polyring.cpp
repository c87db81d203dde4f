#include "braidforge/polyring.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bf {

UnitPoint UnitPoint::from_angle(double theta)
{
    return {std::polar(1.0, theta), std::polar(1.0, theta / 2)};
}

UnitPoint UnitPoint::from_fraction(long a, long b)
{
    if (b == 0)
        throw std::invalid_argument("zero denominator in t fraction");
    double th = 2 * std::numbers::pi * double(a) / double(b);
    th -= 2 * std::numbers::pi * std::round(th / (2 * std::numbers::pi));
    return from_angle(th);
}

UnitPoint UnitPoint::principal(std::complex<double> t) { return from_angle(std::arg(t)); }

Poly t_pow(int e, char var) { return Poly::power(e, var); }
Poly t_half(int d, char var) { return Poly::monomial(1, d, var); }

Poly substitute_two_to_one(const Poly2& P, SubstRule rule)
{
    Poly out;
    if (P.is_zero())
        return out;
    // group by z exponent
    std::map<int, Poly> byz;
    for (auto& [k, c] : P.terms()) {
        if (k.second % 2)
            throw std::domain_error("half-integral z exponent");
        Poly term = rule == SubstRule::Alexander ? Poly(c) : Poly::monomial(c, k.first);
        byz[k.second / 2] += term;
    }
    int zmin = byz.begin()->first;
    int m = zmin < 0 ? -zmin : 0;
    Poly z = half_diff<Int>();
    Poly sum;
    for (auto& [k, a] : byz)
        sum += a * z.pow(k + m);
    return m ? exact_divide(sum, z.pow(m)) : sum;
}

std::vector<std::complex<double>> default_p21_samples()
{
    return {std::polar(1.0, 0.3), std::polar(1.0, 1.1), std::polar(1.0, 2.0), std::polar(1.0, 2.9), std::polar(1.0, -0.7)};
}

double check_p21(const Poly2& P, const std::vector<std::complex<double>>& vs)
{
    double worst = 0;
    for (auto v : vs) {
        std::complex<double> z = 1.0 / v - v;
        std::complex<double> acc = 0;
        for (auto& [k, c] : P.terms()) {
            if (k.first % 2 || k.second % 2)
                throw std::domain_error("half-integral exponent in skein polynomial");
            acc += double(c) * std::pow(v, k.first / 2) * std::pow(z, k.second / 2);
        }
        worst = std::max(worst, std::abs(acc - 1.0));
    }
    return worst;
}

bool is_admissible_alexander(const Poly& p, int n)
{
    if (n < 1)
        return false;
    if (p.is_zero())
        return n > 1;
    if (!p.parity_is((n - 1) % 2))
        return false;
    Poly mirror = p.inverted();
    if (n % 2 == 0)
        mirror = -mirror;
    if (mirror != p)
        return false;
    if (n == 1) {
        Int s = 0;
        p.for_each([&](int, Int c) { s += c; });
        return s == 1;
    }
    return divides(half_diff<Int>().pow(n - 1), p);
}

double norm_n(const Poly& p, int n)
{
    double s = 0;
    p.for_each([&](int, Int c) { s += std::pow(std::abs(double(c)), n); });
    return std::pow(s, 1.0 / n);
}

namespace {

// ordinary coefficients a_0..a_N in the variable chosen for root finding
std::vector<double> ordinary(const Poly& p)
{
    int step = (p.parity_is(0) || p.parity_is(1)) ? 2 : 1;
    std::vector<double> a;
    int lo = p.dmin();
    for (int d = lo; d <= p.dmax(); d += step)
        a.push_back(double(p.coeff(d)));
    return a;
}

} // namespace

std::vector<std::complex<double>> roots(const Poly& p)
{
    if (p.is_zero())
        throw std::domain_error("roots of the zero polynomial");
    auto a = ordinary(p);
    const int N = int(a.size()) - 1;
    std::vector<std::complex<double>> out;
    if (N <= 0)
        return out;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(N, N);
    for (int i = 1; i < N; ++i)
        C(i, i - 1) = 1.0;
    for (int i = 0; i < N; ++i)
        C(i, N - 1) = -a[size_t(i)] / a[size_t(N)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    auto ev = es.eigenvalues();
    for (int i = 0; i < N; ++i)
        out.push_back(ev(i));
    return out;
}

MahlerData norms_and_mahler(const Poly& p, int jensen_points)
{
    if (p.is_zero())
        throw std::domain_error("Mahler measure of the zero polynomial");
    MahlerData m;
    m.norm1 = norm_n(p, 1);
    m.norm2 = norm_n(p, 2);
    double prod = 1;
    for (auto r : roots(p))
        if (std::abs(r) >= 1.0)
            prod *= std::abs(r);
    m.mahler_roots = prod;
    auto a = ordinary(p);
    m.mahler_classical = prod * std::abs(a.back());
    double acc = 0;
    for (int k = 0; k < jensen_points; ++k) {
        double th = 2 * std::numbers::pi * (k + 0.5) / jensen_points;
        std::complex<double> z = std::polar(1.0, th), v = 0;
        for (size_t i = a.size(); i-- > 0;)
            v = v * z + a[i];
        acc += std::log(std::abs(v));
    }
    m.jensen_log = acc / jensen_points;
    return m;
}

namespace {

std::string exp_str(int d)
{
    if (d % 2 == 0)
        return std::to_string(d / 2);
    return "(" + std::to_string(d) + "/2)";
}

template <class T>
std::string coeff_str(const T& c) { std::ostringstream os; os << c; return os.str(); }

std::string mono(char var, int d)
{
    if (d == 0)
        return "";
    if (d == 2)
        return std::string(1, var);
    return std::string(1, var) + "^" + exp_str(d);
}

} // namespace

std::string to_text(const Poly& p)
{
    std::ostringstream os;
    os << p.var() << ':';
    p.for_each([&](int d, Int c) { os << ' ' << d << ':' << c; });
    return os.str();
}

Poly poly_from_text(const std::string& s)
{
    std::istringstream is(s);
    std::string head;
    is >> head;
    if (head.size() != 2 || head[1] != ':')
        throw std::invalid_argument("expected variable tag like 't:'");
    Poly p;
    p.set_var(head[0]);
    std::string tok;
    while (is >> tok) {
        auto c = tok.find(':');
        if (c == std::string::npos)
            throw std::invalid_argument("bad term '" + tok + "'");
        p.add_term(std::stoi(tok.substr(0, c)), std::stoll(tok.substr(c + 1)));
    }
    p.set_var(head[0]);
    return p;
}

std::string to_human(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    p.for_each([&](int d, Int c) {
        Int a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::string m = mono(p.var(), d);
        if (m.empty())
            os << a;
        else if (a == 1)
            os << m;
        else
            os << a << '*' << m;
    });
    return os.str();
}

Poly poly_from_human(const std::string& s, char var)
{
    Poly p;
    p.set_var(var);
    size_t i = 0;
    auto ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    ws();
    if (s.substr(i) == "0")
        return p;
    bool any = false;
    while (true) {
        ws();
        if (i >= s.size())
            break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        Int c = 1;
        bool have_c = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t used;
            c = std::stoll(s.substr(i), &used);
            i += used;
            have_c = true;
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                ws();
            }
        }
        int d = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            d = 2;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i < s.size() && s[i] == '(') {
                    ++i;
                    size_t used;
                    int num = std::stoi(s.substr(i), &used);
                    i += used;
                    if (s.compare(i, 3, "/2)") != 0)
                        throw std::invalid_argument("half exponent must be written (k/2)");
                    i += 3;
                    d = num;
                } else {
                    size_t used;
                    d = 2 * std::stoi(s.substr(i), &used);
                    i += used;
                }
            }
        } else if (!have_c) {
            throw std::invalid_argument("bad term in polynomial '" + s + "'");
        }
        p.add_term(d, sign * c);
        any = true;
    }
    p.set_var(var);
    return p;
}

std::string to_human(const Poly2& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : p.terms()) {
        Int a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::string m1 = mono(p.var1(), k.first), m2 = mono(p.var2(), k.second);
        std::string m = m1.empty() ? m2 : (m2.empty() ? m1 : m1 + "*" + m2);
        if (m.empty())
            os << a;
        else if (a == 1)
            os << m;
        else
            os << a << '*' << m;
    }
    return os.str();
}

std::string to_text(const Poly2& p)
{
    std::ostringstream os;
    os << p.var1() << p.var2() << ':';
    for (auto& [k, c] : p.terms())
        os << ' ' << k.first << ',' << k.second << ':' << c;
    return os.str();
}

Poly2 poly2_from_text(const std::string& s)
{
    std::istringstream is(s);
    std::string head;
    is >> head;
    if (head.size() != 3 || head[2] != ':')
        throw std::invalid_argument("expected variable tags like 'vz:'");
    Poly2 p;
    std::string tok;
    while (is >> tok) {
        auto comma = tok.find(','), colon = tok.find(':');
        if (comma == std::string::npos || colon == std::string::npos || colon < comma)
            throw std::invalid_argument("bad term '" + tok + "'");
        p.add_term(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1, colon - comma - 1)),
                   std::stoll(tok.substr(colon + 1)));
    }
    p.set_vars(head[0], head[1]);
    return p;
}

std::string to_human(const GPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    p.for_each([&](int d, const Gauss& c) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << c.re << (c.im < 0 ? "-" : "+") << (c.im < 0 ? -c.im : c.im) << "i)";
        std::string m = mono(p.var(), d);
        if (!m.empty())
            os << '*' << m;
    });
    return os.str();
}

Poly to_symmetric_basis(const Poly& p, char xvar)
{
    Poly rest = p, out;
    out.set_var(xvar);
    Poly x = Poly::power(1, p.var()) + Poly::power(-1, p.var());
    while (!rest.is_zero()) {
        int d = rest.dmax();
        if (d % 2)
            throw std::domain_error("half-integral exponent in symmetric conversion");
        if (d < 0)
            throw std::domain_error("polynomial is not symmetric");
        Int c = rest.max_cf();
        if (d == 0) {
            if (rest.dmin() != 0)
                throw std::domain_error("polynomial is not symmetric");
            out.add_term(0, c);
            break;
        }
        rest -= Poly(c) * x.pow(d / 2);
        out.add_term(d, c);
    }
    out.set_var(xvar);
    return out;
}

Poly to_z_basis(const Poly& p)
{
    Poly rest = p, out;
    out.set_var('z');
    Poly z = Poly::monomial(1, 1, p.var()) - Poly::monomial(1, -1, p.var());
    while (!rest.is_zero()) {
        int d = rest.dmax();
        if (d < 0)
            throw std::domain_error("not a polynomial in s - 1/s");
        Int c = rest.max_cf();
        if (d == 0) {
            if (rest.dmin() != 0)
                throw std::domain_error("not a polynomial in s - 1/s");
            out.add_term(0, c);
            break;
        }
        rest -= Poly(c) * z.pow(d);
        out.add_term(2 * d, c);
    }
    out.set_var('z');
    return out;
}

} // namespace bf
