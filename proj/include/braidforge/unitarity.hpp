#pragma once

#include "braidforge/braidword.hpp"
#include "braidforge/polyring.hpp"

#include <Eigen/Core>

#include <complex>
#include <optional>
#include <string>

namespace bf {

using cplx = std::complex<double>;

// Squier's Hermitian form on B_n at a unit point: (n-1)x(n-1), s + 1/s on the diagonal, -1 next to it
struct SquierMatrix {
    int n = 2;
    UnitPoint t;
    Eigen::MatrixXcd J;
};

SquierMatrix squier_form(int n, const UnitPoint& t);
cplx squier_det(const SquierMatrix& m);
cplx squier_det_closed_form(int n, const UnitPoint& t); // (t^n - 1) / ((s - 1/s) s^n), n at t = 1
bool is_positive_definite(const SquierMatrix& m, double tol = 1e-12); // leading principal minors
bool in_definiteness_region(int n, const UnitPoint& t);               // |arg t| < 2 pi / n

// The form invariant under the reduced Burau matrices used here (Jones's convention):
// diag(s^-k) J diag(s^-k)^*, i.e. -1/s above and -s below the diagonal.
Eigen::MatrixXcd squier_invariant_form(int n, const UnitPoint& t);
// L^* psi L^-*, where L L^* is the invariant form; unitary inside the definiteness region.
// throws std::domain_error outside it
Eigen::MatrixXcd unitarized_burau(const BraidWord& w, const UnitPoint& t);

enum class Status { Excluded, Consistent, Inconclusive };
std::string to_string(Status s);

struct UnitarityVerdict {
    Status status = Status::Consistent;
    std::string test;
    cplx t;
    double value = 0; // the evaluated quantity (norm, |delta|, ...)
    double bound = 0;
    double tol = 0;
    // eigenvalue test only
    std::optional<double> delta, y, y_lo, y_hi;
    std::optional<cplx> lambda;
    std::string reason;
};

// Bound on |V(t)| from unitarity of the Burau traces, n in {3, 4}: 2 + |1 + t^2| on 3 strands,
// 3|1-t^3|/|1-t^2| + 2/|1+t| + |1-t^5|/|1-t^2| on 4. It equals (2 Re sqrt t)^(n-1) for |arg t| <= pi/2
// (n = 3) and |arg t| <= 2 pi/5 (n = 4), and exceeds it beyond.
double jones_norm_bound(const UnitPoint& t, int n);
double jones_norm_closed_form(const UnitPoint& t, int n);
// needs Re t > 0 (n = 4) or Re t > -1/2 (n = 3)
UnitarityVerdict jones_norm_test(const Poly& V, const UnitPoint& t, int n);
// |Delta(t)| <= 2^(n-1) |1 - t| / |1 - t^n| for |arg t| <= 2 pi / n
UnitarityVerdict alexander_norm_test(const Poly& D, const UnitPoint& t, int n);
// both when given; excluded if either is
UnitarityVerdict norm_tests(const std::optional<Poly>& V, const std::optional<Poly>& D, const UnitPoint& t, int n);
// with the exponent sum known; n in {3, 4}
UnitarityVerdict refined_test(const Poly& D, int e, const UnitPoint& t, int n);

// Recover the Burau eigenvalues of a putative 4-braid from (Delta, V, e) at t, |arg t| <= pi/2, t != 1.
UnitarityVerdict fourbraid_eigen_test(const Poly& D, const Poly& V, int e, const UnitPoint& t, double step = 1e-4,
                                      double tol = 1e-9);

// The two numbers the eigenvalue test works with, straight from a braid: delta and rho.
struct BurauTraceData {
    cplx delta; // real for genuine data
    cplx rho;   // real in [-2, 2] for genuine data
    cplx trace; // tr psi_3
    cplx y;     // real part coordinate of the trace, (-t)^(-e/2) tr psi_3 - i delta
};
BurauTraceData burau_trace_data(const BraidWord& w, const UnitPoint& t);

} // namespace bf
