#pragma once

#include "braidforge/braidword.hpp"
#include "braidforge/laurent.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bf {

enum class StateKind { A, B };

// Closure diagram of a braid, every crossing spliced the same way.
// On a braid diagram the A-splice of a positive crossing keeps the strands (Seifert splice),
// the A-splice of a negative crossing joins the two upper and the two lower ends.
struct StateGraph {
    int loops = 0;
    std::vector<std::pair<int, int>> traces;         // per crossing, the loops it joins (sorted pair)
    std::map<std::pair<int, int>, int> multiplicity; // per loop pair
    std::vector<std::vector<int>> order;             // per loop: crossings met along it, in cyclic order
};

StateGraph state(const BraidWord& w, StateKind kind);
bool is_adequate(const BraidWord& w, StateKind kind);

// throws std::invalid_argument unless strands = 3 and the word is cyclically reduced
bool b_adequate_3braid_criterion(const BraidWord& w);

struct AGraphSummary {
    int chi_g = 0;  // vertices - edges of the simple graph
    int chi_ig = 0; // vertices - edges of the intertwining graph
    int triangles = 0;
};
AGraphSummary graph_summary(const StateGraph& s);

struct EdgeCoefficients {
    Int v0v1 = 0;
    Int v0v2 = 0;
};
// For A: V_0 V_1 and V_0 V_2 from the lowest end of V; for B the same from the highest end.
// Needs a connected diagram (every generator used) that is adequate of that kind.
EdgeCoefficients jones_edge_coefficients(const BraidWord& w, StateKind kind = StateKind::A);
// the same quantities read off a Jones polynomial
EdgeCoefficients edge_coefficients_of(const Poly& V, StateKind kind = StateKind::A);

// Kauffman bracket state sum, normalized to V(t); throws above max_crossings
Poly bracket_oracle(const BraidWord& w, int max_crossings = 22);

// a conjugate (rotation of w conjugated by a word of length <= max_len) that is A- or B-adequate
std::optional<BraidWord> semiadequate_conjugate(const BraidWord& w, int max_len = 6);

} // namespace bf
