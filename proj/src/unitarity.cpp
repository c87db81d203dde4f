#include "braidforge/unitarity.hpp"

#include "braidforge/burau.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <array>
#include <cmath>
#include <stdexcept>

namespace bf {

namespace {

constexpr double pi = 3.14159265358979323846;
const cplx I(0, 1);
// a bound is only called violated when it is exceeded by more than this
constexpr double margin = 1e-6;

cplx ipow(cplx z, int k)
{
    cplx r = 1;
    cplx b = k >= 0 ? z : 1.0 / z;
    for (int i = 0; i < std::abs(k); ++i)
        r *= b;
    return r;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

UnitarityVerdict verdict(const char* test, const UnitPoint& t, double value, double bound)
{
    UnitarityVerdict v;
    v.test = test;
    v.t = t.t;
    v.value = value;
    v.bound = bound;
    v.tol = margin;
    v.status = value > bound + margin ? Status::Excluded : Status::Consistent;
    return v;
}

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::Excluded:
        return "excluded";
    case Status::Consistent:
        return "consistent";
    default:
        return "inconclusive";
    }
}

SquierMatrix squier_form(int n, const UnitPoint& t)
{
    require(n >= 2, "Squier form needs n >= 2");
    SquierMatrix m;
    m.n = n;
    m.t = t;
    const int d = n - 1;
    m.J = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        m.J(i, i) = t.s + 1.0 / t.s;
        if (i + 1 < d)
            m.J(i, i + 1) = m.J(i + 1, i) = -1.0;
    }
    return m;
}

cplx squier_det(const SquierMatrix& m) { return m.J.determinant(); }

cplx squier_det_closed_form(int n, const UnitPoint& t)
{
    cplx den = t.s - 1.0 / t.s;
    if (std::abs(den) < 1e-12)
        return double(n) * ipow(t.s, n - 1); // t = 1, s = +-1
    return (ipow(t.t, n) - 1.0) / (den * ipow(t.s, n));
}

bool is_positive_definite(const SquierMatrix& m, double tol)
{
    for (int k = 1; k <= m.J.rows(); ++k) {
        cplx d = m.J.topLeftCorner(k, k).determinant();
        if (!(d.real() > tol))
            return false;
    }
    return true;
}

bool in_definiteness_region(int n, const UnitPoint& t) { return std::abs(std::arg(t.t)) < 2 * pi / n; }

Eigen::MatrixXcd squier_invariant_form(int n, const UnitPoint& t)
{
    auto m = squier_form(n, t);
    Eigen::MatrixXcd J0 = m.J;
    for (int i = 0; i + 1 < J0.rows(); ++i) {
        J0(i, i + 1) = -1.0 / t.s;
        J0(i + 1, i) = -t.s;
    }
    return J0;
}

Eigen::MatrixXcd unitarized_burau(const BraidWord& w, const UnitPoint& t)
{
    if (!in_definiteness_region(w.strands, t))
        throw std::domain_error("Squier form is not definite at this t");
    Eigen::MatrixXcd J0 = squier_invariant_form(w.strands, t);
    Eigen::LLT<Eigen::MatrixXcd> llt(J0);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("Squier form is not definite at this t");
    Eigen::MatrixXcd L = llt.matrixL();
    Eigen::MatrixXcd psi = evaluate(reduced_burau(w), t.s);
    Eigen::MatrixXcd Ls = L.adjoint();
    return Ls * psi * Ls.inverse();
}

double jones_norm_bound(const UnitPoint& t, int n)
{
    const cplx x = t.t;
    if (n == 3)
        return 2 + std::abs(1.0 + x * x);
    if (std::abs(1.0 - x * x) < 1e-9)
        return 8; // t = 1
    return 3 * std::abs((1.0 - ipow(x, 3)) / (1.0 - x * x)) + 2 / std::abs(1.0 + x) +
           std::abs((1.0 - ipow(x, 5)) / (1.0 - x * x));
}

double jones_norm_closed_form(const UnitPoint& t, int n) { return std::pow(2 * std::cos(std::arg(t.t) / 2), n - 1); }

UnitarityVerdict jones_norm_test(const Poly& V, const UnitPoint& t, int n)
{
    require(n == 3 || n == 4, "Jones norm test is for 3- and 4-braids");
    require(n == 4 ? t.t.real() > 0 : t.t.real() > -0.5, "t outside the region of the Jones norm test");
    auto v = verdict(n == 4 ? "jones_norm_4" : "jones_norm_3", t, std::abs(V.eval_half(t.s)), jones_norm_bound(t, n));
    if (v.status == Status::Excluded)
        v.reason = "|V(t)| exceeds the bound for braid index " + std::to_string(n);
    return v;
}

UnitarityVerdict alexander_norm_test(const Poly& D, const UnitPoint& t, int n)
{
    require(n >= 2, "Alexander norm test needs n >= 2");
    require(std::abs(std::arg(t.t)) <= 2 * pi / n + 1e-12, "t outside the region of the Alexander norm test");
    cplx tn = ipow(t.t, n);
    double bound;
    if (std::abs(1.0 - t.t) < 1e-12)
        bound = std::pow(2.0, n - 1) / n;
    else if (std::abs(1.0 - tn) < 1e-12)
        bound = INFINITY;
    else
        bound = std::pow(2.0, n - 1) * std::abs(1.0 - t.t) / std::abs(1.0 - tn);
    auto v = verdict("alexander_norm", t, std::abs(D.eval_half(t.s)), bound);
    if (v.status == Status::Excluded)
        v.reason = "|Delta(t)| exceeds the bound for braid index " + std::to_string(n);
    return v;
}

UnitarityVerdict norm_tests(const std::optional<Poly>& V, const std::optional<Poly>& D, const UnitPoint& t, int n)
{
    require(V || D, "norm tests need a polynomial");
    std::optional<UnitarityVerdict> a, b;
    if (V)
        a = jones_norm_test(*V, t, n);
    if (D)
        b = alexander_norm_test(*D, t, n);
    if (a && b)
        return a->status == Status::Excluded || b->status != Status::Excluded ? *a : *b;
    return a ? *a : *b;
}

UnitarityVerdict refined_test(const Poly& D, int e, const UnitPoint& t, int n)
{
    require(n == 3 || n == 4, "refined test is for 3- and 4-braids");
    require(n == 4 ? t.t.real() > 0 : t.t.real() > -0.5, "t outside the region of the refined test");
    require(std::abs(1.0 - t.t) > 1e-9, "refined test needs t != 1");
    cplx d = D.eval_half(t.s) * (1.0 - ipow(t.t, n)) / (1.0 - t.t) * ipow(-t.s, e - n + 1);
    cplx x = n == 4 ? d - 1.0 + ipow(-t.t, e) : d - 1.0 - ipow(-t.t, e);
    auto v = verdict(n == 4 ? "refined_4" : "refined_3", t, std::abs(x), n == 4 ? 6.0 : 2.0);
    if (v.status == Status::Excluded)
        v.reason = "exponent sum " + std::to_string(e) + " incompatible with Delta(t)";
    return v;
}

namespace {

// the three roots of x^3 + a x^2 + b x + c by Cardano, the first one the principal branch
std::array<cplx, 3> cardano(cplx a, cplx b, cplx c)
{
    const double cb2 = std::cbrt(2.0);
    cplx disc = std::sqrt(27.0 * (-a * a * b * b + 4.0 * b * b * b + 4.0 * a * a * a * c - 18.0 * a * b * c + 27.0 * c * c));
    cplx base = -2.0 * a * a * a + 9.0 * a * b - 27.0 * c;
    cplx G = std::pow(base + disc, 1.0 / 3);
    // near a cancelling radicand take the other square root
    if (std::abs(G) < 1e-7)
        G = std::pow(base - disc, 1.0 / 3);
    std::array<cplx, 3> r;
    if (std::abs(G) < 1e-12) {
        r.fill(-a / 3.0);
        return r;
    }
    const cplx om = std::polar(1.0, 2 * pi / 3);
    cplx g = G;
    for (auto& x : r) {
        x = -a / 3.0 - cb2 * (-a * a + 3.0 * b) / (3.0 * g) + g / (3.0 * cb2);
        g *= om;
    }
    return r;
}

} // namespace

UnitarityVerdict fourbraid_eigen_test(const Poly& D, const Poly& V, int e, const UnitPoint& t, double step, double tol)
{
    require(std::abs(std::arg(t.t)) <= pi / 2 + 1e-12, "eigenvalue test needs |arg t| <= pi/2");
    require(std::abs(1.0 - t.t) > 1e-6, "eigenvalue test needs t != 1");
    require(step > 0, "step must be positive");
    UnitarityVerdict v;
    v.test = "fourbraid_eigen";
    v.t = t.t;
    v.tol = tol;
    const cplx tt = t.t, s = t.s;
    const cplx w = I * s; // a fixed square root of -t
    const cplx we = ipow(w, e), C = ipow(-tt, e);

    cplx Dt = D.eval_half(s) * (1.0 - ipow(tt, 4)) / (1.0 - tt) * ipow(-s, e - 3);
    cplx dc = -(Dt - 1.0 + C) / (2.0 * I * we);
    v.delta = dc.real();
    v.value = std::abs(dc.real());
    v.bound = 3;
    if (std::abs(dc.imag()) > 1e-6) {
        v.status = Status::Inconclusive;
        v.reason = "delta is not real: inputs are not consistent";
        return v;
    }
    const double delta = dc.real();
    if (std::abs(delta) > 3 + margin) {
        v.status = Status::Excluded;
        v.reason = "|delta| > 3";
        return v;
    }
    const double y0 = std::sqrt(std::max(0.0, 9 - delta * delta));

    // the Jones polynomial pins y to an interval through rho in [-2, 2]
    cplx base = (1.0 - tt * tt) / (tt * (1.0 - ipow(tt, 3))) *
                (V.eval_half(s) * ipow(-1.0 / s, e - 3) - (1.0 - ipow(tt, 5)) / (1.0 - tt * tt));
    auto ytil = [&](double rho) { return base / we - rho / (1 + 2 * tt.real()) - I * delta; };
    cplx ym = ytil(-2), yp = ytil(2);
    if (std::abs(ym.imag()) > 1e-6 || std::abs(yp.imag()) > 1e-6) {
        v.status = Status::Inconclusive;
        v.reason = "Jones interval is not real: inputs are not consistent";
        return v;
    }
    double lo = std::max(-y0, std::min(ym.real(), yp.real())), hi = std::min(y0, std::max(ym.real(), yp.real()));
    v.y_lo = lo;
    v.y_hi = hi;
    if (lo > hi + margin) {
        // cannot happen for genuine data, but the scan below would only see an empty range
        v.status = Status::Inconclusive;
        v.reason = "trace intervals from Delta and V do not overlap";
        return v;
    }
    hi = std::max(lo, hi);

    // scan y; each root's error between grid points is bounded through dlambda/dy
    const int steps = int(std::ceil((hi - lo) / step));
    for (int k = 0; k <= steps; ++k) {
        double y = std::min(hi, lo + k * step);
        cplx A = we * (y + I * delta), B = we * (y - I * delta);
        for (cplx lam : cardano(-A, B, -C)) {
            cplx dp = 3.0 * lam * lam - 2.0 * A * lam + B;
            cplx dlam = std::abs(dp) < 1e-300 ? cplx(INFINITY) : -(-we * lam * lam + we * lam) / dp;
            double err = tol + 2 * std::abs(dlam) * step;
            if (std::abs(std::abs(lam) - 1) > err)
                continue;
            cplx q = (A - lam) * (A - lam) * lam / C;
            cplx dq = (2.0 * (A - lam) * (we - dlam) * lam + (A - lam) * (A - lam) * dlam) / C;
            double qerr = tol + 2 * std::abs(dq) * step;
            if (std::abs(q.imag()) > qerr || q.real() < -qerr || q.real() > 4 + qerr)
                continue;
            v.status = Status::Consistent;
            v.y = y;
            v.lambda = lam;
            return v;
        }
    }
    v.status = Status::Excluded;
    v.reason = "no y gives unit eigenvalues";
    return v;
}

BurauTraceData burau_trace_data(const BraidWord& w, const UnitPoint& t)
{
    require(w.strands == 4, "trace data is for 4-braids");
    const int e = exponent_sum(w);
    const cplx we = ipow(I * t.s, e);
    Eigen::MatrixXcd m = evaluate(reduced_burau(w), t.s);
    Eigen::MatrixXcd m2 = evaluate(reduced_burau(bar_hom(w)), t.s);
    BurauTraceData d;
    d.trace = m.trace();
    cplx wedge = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                 (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    d.delta = -(wedge - d.trace) / (2.0 * I * we);
    d.rho = m2.trace() / we;
    d.y = d.trace / we - I * d.delta;
    return d;
}

} // namespace bf
