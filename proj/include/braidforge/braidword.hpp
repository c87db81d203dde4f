#pragma once

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bf {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int column)
        : std::runtime_error(msg + " at column " + std::to_string(column)), column(column) {}
    int column;
};

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    int length() const { return int(letters.size()); }
    bool empty() const { return letters.empty(); }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
    friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
};

struct Syllable {
    int index;
    int exponent;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct WordStats {
    int length = 0;          // c
    int positive = 0;        // c_+
    int negative = 0;        // c_-
    int exponent_sum = 0;    // [beta]
    int index_sum = 0;       // sum of |letter|
    int syllable_length = 0; // non-cyclic
    std::vector<int> gen_exponent; // [beta]_k, k = 1..n-1 at slot k-1
    bool non_singular = false;     // [beta]_k > 1 for all k
};

struct ClosureData {
    std::vector<int> permutation;            // bottom position -> top position (0-based)
    int components = 0;
    std::vector<int> component_of_strand;    // strand (bottom position) -> component
    std::vector<std::set<int>> letter_sets;  // generator indices seen by each component
    std::vector<std::vector<int>> strand_lk; // writhe sums, no 1/2
    std::vector<std::vector<int>> crossing_sum; // between components, sign sums
    // lk(K_i, K_j) = crossing_sum / 2
    int lk(int i, int j) const { return crossing_sum[size_t(i)][size_t(j)] / 2; }
};

BraidWord parse_braid(const std::string& text);
std::string to_string(const BraidWord& w);
// letters of a bracket/long form body without strand bookkeeping
std::vector<int> parse_letters(const std::string& text);

std::vector<Syllable> syllable_decomposition(const BraidWord& w, bool cyclic);
WordStats word_stats(const BraidWord& w);
std::vector<int> schreier_vector(const BraidWord& w);

ClosureData closure_data(const BraidWord& w);
int components(const BraidWord& w);
BraidWord two_cable(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord cyclic_reduce(const BraidWord& w);
BraidWord cyclic_permute(const BraidWord& w, int k);
BraidWord mirror(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, int k);
BraidWord with_strands(const BraidWord& w, int n);
bool is_positive(const BraidWord& w);
bool is_negative(const BraidWord& w);
BraidWord markov_destabilize(const BraidWord& w);
bool can_destabilize(const BraidWord& w);
bool contains_subword(const BraidWord& w, const std::vector<int>& sub, bool cyclic = true);
int exponent_sum(const BraidWord& w);
// lexicographically least rotation of a cyclically reduced word
BraidWord min_rotation(const BraidWord& w);

// Garside half twist and full twist in B_n
BraidWord half_twist(int n);
BraidWord full_twist(int n);

BraidWord random_word(std::mt19937_64& rng, int strands, int length, bool positive_only = false);

} // namespace bf
