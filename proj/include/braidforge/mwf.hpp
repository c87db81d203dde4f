#pragma once

#include "braidforge/braidword.hpp"

#include <map>
#include <string>
#include <vector>

namespace bf {

// Positive resolution trees. A node word with a square s_i s_i (after positive braid moves and rotation)
// has the two children obtained by dropping one or both letters.
struct ResolutionNode {
    BraidWord word;  // canonical: split off, destabilized, least rotation
    int components = 0;
    std::vector<int> children; // indices into ResolutionTree::nodes, 0 or 2 of them
};

struct ResolutionTree {
    std::vector<ResolutionNode> nodes; // nodes[0] is the root
};

// Maximal number of closure components over the nodes of a positive resolution tree.
// throws std::invalid_argument on a non-positive word, std::runtime_error above the state budget
int resolution_mwf(const BraidWord& w, size_t budget = 2000000);
ResolutionTree resolution_tree(const BraidWord& w, size_t budget = 200000);

// canonical form used at tree nodes: blocks of a split closure with single letters destabilized away;
// each block is a least rotation on its own strands
struct NodeForm {
    std::vector<BraidWord> blocks;
    int loose = 0; // strands split off with no crossings
    int components() const;
};
NodeForm node_form(const BraidWord& w);

struct SummitStructure {
    std::vector<Syllable> syllables;    // cyclic syllables of the word
    std::vector<bool> summit;           // per syllable
    std::vector<int> maximal;           // positions of summit syllables, in cyclic order
    std::vector<int> minimal_positions; // valley bottoms (both summit neighbours higher)
    std::vector<int> maximal_positions; // mountain tops (both summit neighbours lower)
    std::vector<int> depths, heights;   // indices of the bottoms and tops
    std::vector<std::vector<int>> plateaus; // runs of the maximal subword between index-1 summit syllables
};

// throws std::invalid_argument on a non-positive word
SummitStructure summit_structure(const BraidWord& w);
BraidWord maximal_subword(const BraidWord& w);
BraidWord non_maximal_subword(const BraidWord& w); // what remains after removing all summit syllables

// non-singular, and no s_{i+1} s_i s_{i+1} in any cyclic word reached by far commutations
bool is_index_reduced(const BraidWord& w, size_t budget = 200000);
bool is_summit_reduced(const BraidWord& w); // every valley bottom non-trivial
// non-maximal subword of a summit reduced word (a node of some positive resolution tree)
BraidWord remove_summit(const BraidWord& w);
// deletes the valley bottom at the given syllable position, and keeps deleting while the merged
// neighbours form a new non-trivial bottom; throws if the bottom is trivial or not a bottom
BraidWord fill_valley(const BraidWord& w, int position);

struct ExceptionMatch {
    bool matched = false;
    int family = 0;      // 1: [22*3*122*11*23211*], 2: [22*3122*11*23*211*]
    std::string pattern; // the matching rotation
};
ExceptionMatch thmwf_exception_match(const BraidWord& w);

} // namespace bf
