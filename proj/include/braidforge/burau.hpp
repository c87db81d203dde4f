#pragma once

#include "braidforge/braidword.hpp"
#include "braidforge/laurent.hpp"

#include <Eigen/Core>

#include <complex>

namespace Eigen {
template <>
struct NumTraits<bf::Poly> : GenericNumTraits<bf::Poly> {
    using Real = bf::Poly;
    using NonInteger = bf::Poly;
    using Literal = bf::Poly;
    using Nested = bf::Poly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
};
} // namespace Eigen

namespace bf {

using LaurentMatrix = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;

// Generator matrices (Jones's convention), acting on rows/columns i-1, i, i+1 (1-based):
//   psi(s_i)    = [[1, 0, 0], [t, -t, 1], [0, 0, 1]]
//   psi(s_i)^-1 = [[1, 0, 0], [1, -1/t, 1/t], [0, 0, 1]]
// Squier's form is the transpose with t -> -t type sign changes; conjugating by diag(1,-1,1,...)
// flips the off-diagonal signs.
LaurentMatrix burau_generator(int strands, int letter, char var = 't');
LaurentMatrix reduced_burau(const BraidWord& w, char var = 't');
// same, multiplying by generator matrices explicitly (used as a cross-check)
LaurentMatrix reduced_burau_naive(const BraidWord& w, char var = 't');

LaurentMatrix lmat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
Poly lmat_det(const LaurentMatrix& m);
Poly lmat_trace(const LaurentMatrix& m);
Poly minor_det(const LaurentMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
LaurentMatrix exterior_power(const LaurentMatrix& m, int j);
// trace of the j-th exterior power = sum of principal j-minors
Poly trace_exterior(const LaurentMatrix& m, int j);
// det(lambda I - M) coefficients as polynomials: returns c_0..c_d with char poly sum c_k lambda^k
std::vector<Poly> char_poly(const LaurentMatrix& m);

Poly alexander(const BraidWord& w);
Poly jones3(const BraidWord& w);
Poly jones4(const BraidWord& w);
// V for strands <= 4 via the trace formulas (stabilizing when fewer strands)
Poly jones_burau(const BraidWord& w);
BraidWord bar_hom(const BraidWord& w);

// (-sqrt t)^k
Poly neg_sqrt_pow(int k, char var = 't');

struct FamilyLn {
    Poly V;
    Poly Delta;
};
FamilyLn family_ln(int n);
std::pair<std::complex<double>, std::complex<double>> family_ln_numeric(int n, std::complex<double> t);
BraidWord family_ln_word(int n);

std::complex<double> eval_matrix_entry(const Poly& p, std::complex<double> s);
Eigen::MatrixXcd evaluate(const LaurentMatrix& m, std::complex<double> s);

} // namespace bf
