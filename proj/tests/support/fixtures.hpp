#pragma once

// Hand-built DGAs for unit tests that should not depend on file parsing.

#include "legch/algebra.hpp"

namespace legch::testing {

// q1, q2 in grading 1; q3, q4, q5 in grading 0 (ids 0..4).
inline DGA trefoil_dga() {
    std::vector<Generator> g{{0, "q1", 1}, {1, "q2", 1}, {2, "q3", 0}, {3, "q4", 0}, {4, "q5", 0}};
    const Element d1{Word::unit(), Word{4}, Word{4, 3, 2}, Word{2}};
    const Element d2{Word::unit(), Word{2}, Word{2, 3, 4}, Word{4}};
    return DGA(g, {d1, d2, Element(), Element(), Element()});
}

inline HeightAssignment trefoil_heights() {
    return HeightAssignment({{0, 4}, {1, 4}, {2, 1}, {3, 1}, {4, 1}});
}

// One generator q of grading 1 with d(q) = 1.
inline DGA unit_boundary_dga() {
    return DGA({{0, "q", 1}}, {Element::unit()});
}

// One generator q of grading 1 with d(q) = 0, as in the shipped unknot.
inline DGA unknot_dga() {
    return DGA({{0, "q", 1}}, {Element()});
}

} // namespace legch::testing
