#pragma once

#include "braidforge/braidword.hpp"
#include "braidforge/laurent.hpp"

#include <vector>

namespace bf {

// Gauss diagram of a knot: positions 0..2c-1 along the closure, one chord per crossing
struct GaussChord {
    int under = 0;
    int over = 0;
    int sign = 0;
};
struct GaussDiagram {
    int length = 0; // 2 * chords
    std::vector<GaussChord> chords;
};

// Gauss diagram of one closure component, keeping only its self crossings; the base point sits on the
// closure arc below the lowest bottom position of the component
GaussDiagram gauss_diagram(const BraidWord& w, int component);

// symmetrized Polyak-Viro count: half the signed number of interleaved chord pairs whose arrows
// point in opposite directions along the circle
Int casson_v2(const GaussDiagram& g);
// throws std::invalid_argument unless the closure is a knot
Int casson_v2(const BraidWord& w);

// Q(x) of the closure of a 3-braid from its Jones polynomial and exponent sum.
// throws std::domain_error if the denominators do not cancel
Poly murakami_q(const BraidWord& w);
Poly murakami_q_from_jones(const Poly& V, int e);

// Q'(-2) minus the linking data expression; zero for every link
Rational kanenobu_residual(const BraidWord& w);
Rational kanenobu_rhs(const BraidWord& w);

} // namespace bf
