#pragma once

#include "braidforge/braidword.hpp"
#include "braidforge/laurent.hpp"
#include "braidforge/xuform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bf {

// Degrees below are doubled, as everywhere in the library.
struct AlexProfile {
    bool zero = false;
    int dmax = 0;            // 2 maxdeg Delta
    int maxcf = 0;           // leading coefficient, or its absolute value if !sign_known
    bool sign_known = false;
    std::string reason;
};

struct JonesProfile {
    int hh_case = 0; // 1/2 strongly quasi-signed, 3 generic L^-1 R, 4 one letter in L or R, 0 the unknot sigma1 sigma2^-1
    std::optional<int> dmin, dmax, dmin_ge, dmax_le;
    std::optional<int> span_eq, span_le;
    std::optional<int> mincf_abs, maxcf_abs;
    bool mincf2_at_bound = false; // min deg reaching dmin_ge forces |min cf| = 2
    bool maxcf2_at_bound = false;
    std::string reason;
};

// both need a non-split closure (std::invalid_argument otherwise)
AlexProfile alexander_profile(const BraidWord& w);
JonesProfile jones_profile(const BraidWord& w);

enum class PolyKind { Alexander, Jones };

struct Verdict {
    bool excluded = false;
    std::string reason;
    std::vector<int> chi_candidates; // descending
};

Verdict exclusion_certificate(const Poly& poly, PolyKind kind, int components);

// all band words of Xu shape with the given band length, indices cycled so the first letter of
// R (case A) or L (case B) is a1; not yet reduced to conjugacy classes
std::vector<BandWord> enumerate_xu_shapes(int band_length);

struct SearchResult {
    std::vector<XuForm> forms;     // distinct conjugacy classes, sorted by to_string
    std::vector<int> chi_searched;
    size_t enumerated = 0;
};

// components < 0 means any; throws std::runtime_error when the shapes to test exceed budget
SearchResult search_3braids_by_polynomial(const Poly& target, PolyKind kind, int components = -1,
                                          size_t budget = 2000000);

// P of a closed 3-braid from its Jones polynomial and exponent sum
Poly2 p_from_jones3(const Poly& V, int e);

} // namespace bf
