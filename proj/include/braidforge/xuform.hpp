#pragma once

#include "braidforge/braidword.hpp"

#include <string>
#include <vector>

namespace bf {

// Band words in B3: letters +-1, +-2, +-3 with a1 = s1, a2 = s2, a3 = s2 s1 s2^-1.
struct BandWord {
    std::vector<int> letters;
    friend bool operator==(const BandWord&, const BandWord&) = default;
};

BraidWord band_to_artin(const BandWord& b);
BandWord artin_to_band(const BraidWord& w); // strands must be 3
std::string to_string(const BandWord& b);   // "band:[12-3]"
BandWord parse_band(const std::string& s);  // accepts with or without the "band:" tag
int exponent_sum(const BandWord& b);

// Left normal form delta^inf A_1 ... A_r in the band generator monoid; delta = a2 a1 = a3 a2 = a1 a3.
// Consecutive atoms are x -> x or x -> x+1 (mod 3).
struct DualNF {
    int inf = 0;
    std::vector<int> atoms;
    int sup() const { return inf + int(atoms.size()); }
    friend auto operator<=>(const DualNF&, const DualNF&) = default;
};

// letters: +-1..3 atoms, +-4 for delta^(+-1)
DualNF dual_nf(const std::vector<int>& letters);
DualNF dual_nf(const BraidWord& w);
DualNF dual_mul(DualNF x, const std::vector<int>& letters);
std::vector<int> dual_letters(const DualNF& x);
DualNF dual_cycle(const DualNF& x);
DualNF dual_decycle(const DualNF& x);
// the automorphism a1 -> a2^-1, a2 -> a1^-1, a3 -> a3^-1 (closure goes to its mirror image)
DualNF dual_flip(const DualNF& x);
std::vector<DualNF> super_summit_set(const DualNF& x, size_t budget = 200000);

struct XuForm {
    char kind = 'A';      // 'A': [21]^k R (or its flip), 'B': L^-1 R
    bool negative = false; // case A only: the form is the flip of [21]^k R
    int k = 0;
    std::vector<int> L, R; // positive band words, cyclically non-decreasing
    int inf = 0, sup = 0;  // of the super summit set
    int band_length = 0;

    BandWord band_word() const;
    friend bool operator==(const XuForm&, const XuForm&) = default;
};

XuForm xu_normal_form(const BraidWord& w);
std::string to_string(const XuForm& x);

struct EulerData {
    int chi = 0;
    int components = 0;
    int genus2 = 0; // 2g = 2 - components - chi
};
EulerData euler_char(const BraidWord& w);

// both throw std::invalid_argument on a word missing a generator (split closure)
bool is_strongly_quasipositive(const BraidWord& w);
bool is_fibered(const BraidWord& w);

// beta^-1 [121]^(2[beta]/3); needs 6 | [beta]
BraidWord birman_dual(const BraidWord& w);

struct BandBfsResult {
    int length = 0;
    BandWord witness;
    size_t states = 0;
};
// breadth-first search over length-preserving pair rewrites, cancellations and rotations
BandBfsResult bfs_minimal_band(const BandWord& b, size_t budget = 400000);

} // namespace bf
