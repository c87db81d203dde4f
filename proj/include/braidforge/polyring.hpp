#pragma once

#include "braidforge/laurent.hpp"

#include <complex>
#include <string>
#include <vector>

namespace bf {

// A point t on the unit circle together with the square root used for t^(1/2).
struct UnitPoint {
    std::complex<double> t;
    std::complex<double> s; // s*s == t

    static UnitPoint from_angle(double theta);      // t = e^{i theta}, s = e^{i theta/2}
    static UnitPoint from_fraction(long a, long b);  // t = e^{2 pi i a/b}, principal s
    static UnitPoint principal(std::complex<double> t);
};

enum class SubstRule { Alexander, Jones };

// P(v,z) -> Delta(t) = P(1, t^1/2 - t^-1/2) or V(t) = P(t, t^1/2 - t^-1/2)
Poly substitute_two_to_one(const Poly2& P, SubstRule rule);

// max |P(v, 1/v - v) - 1| over samples; each sample gives v = s (the point's root is unused)
double check_p21(const Poly2& P, const std::vector<std::complex<double>>& vs);
std::vector<std::complex<double>> default_p21_samples();

bool is_admissible_alexander(const Poly& p, int components);

struct MahlerData {
    double norm1 = 0;
    double norm2 = 0;
    double mahler_roots = 0;     // product of |roots| >= 1 only
    double mahler_classical = 0; // times |leading coefficient|
    double jensen_log = 0;       // numeric (1/2pi) int log|p| (classical)
};

double norm_n(const Poly& p, int n);
MahlerData norms_and_mahler(const Poly& p, int jensen_points = 1 << 15);
std::vector<std::complex<double>> roots(const Poly& p);

// Text formats
std::string to_text(const Poly& p);           // "t:" line then "d:c" pairs
Poly poly_from_text(const std::string& s);
std::string to_human(const Poly& p);          // "t^-2 - 3 + t^2", half exponents as t^(1/2)
Poly poly_from_human(const std::string& s, char var = 't');
std::string to_human(const Poly2& p);
std::string to_text(const Poly2& p);
Poly2 poly2_from_text(const std::string& s);
std::string to_human(const GPoly& p);

// small helpers
Poly t_pow(int e, char var = 't');
Poly t_half(int d, char var = 't');
// convert a polynomial in u that is invariant under u -> 1/u into one in x = u + 1/u
Poly to_symmetric_basis(const Poly& p_in_u, char xvar = 'x');
// convert a Laurent polynomial in s = q^1/2 that is invariant under s -> -1/s into one in z = s - 1/s
Poly to_z_basis(const Poly& p_in_s);

} // namespace bf
