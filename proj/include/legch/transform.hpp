#pragma once

// Stabilizations and tame isomorphisms of a DGA, and the linear maps they
// induce after linearization.

#include "legch/algebra.hpp"
#include "legch/augment.hpp"
#include "legch/z2_matrix.hpp"

#include <utility>
#include <vector>

namespace legch {

/// q_target -> q_target + addend, every other generator fixed.
/// Over Z2 this map is its own inverse.
struct ElementaryAutomorphism {
    GeneratorId target = 0;
    Element addend;
};

/// Elementary steps applied in order, followed by the relabelling
/// generator i -> generator relabel[i] of the target DGA.
struct TameIsomorphism {
    std::vector<ElementaryAutomorphism> steps;
    std::vector<GeneratorId> relabel;
};

struct Stabilized {
    DGA dga;
    HeightAssignment heights;
    GeneratorId top;     // e_k
    GeneratorId bottom;  // e_{k-1}
};

// Adjoins e_k (grading k, height h_top) and e_{k-1} (grading k-1, height
// h_bot) with d(e_k) = e_{k-1}, d(e_{k-1}) = 0.  Requires h_top > h_bot > 0.
Stabilized stabilize(const DGA& dga, int k, const Rational& h_top, const Rational& h_bot,
                     const HeightAssignment& heights);

// Image of `element` under phi.
Element apply_automorphism(const ElementaryAutomorphism& phi, const Element& element);

// The DGA with differential phi o d o phi^{-1}.  The addend must avoid the
// target and be homogeneous of the target's grading.
DGA apply_elementary(const DGA& dga, const ElementaryAutomorphism& phi);

// Every letter of every word of the addend is strictly lower than the target.
bool is_semimonotonic(const ElementaryAutomorphism& phi, const HeightAssignment& heights);

// Matrix of the linearization of phi with respect to eps.
Z2Matrix induced_linear_map(const DGA& dga, const ElementaryAutomorphism& phi, const Augmentation& eps);

// The augmentation eps o phi of the conjugated DGA.
Augmentation pull_back_augmentation(const ElementaryAutomorphism& phi, const Augmentation& eps);

// Applies every step and then moves generator i to id relabel[i], keeping its
// name and grading.  The relabelling must be a bijection.
DGA apply_tame(const DGA& dga, const TameIsomorphism& iso);

} // namespace legch
