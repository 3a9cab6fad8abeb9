#pragma once

// Height-filtered linearized complexes and their barcodes.

#include "legch/algebra.hpp"
#include "legch/augment.hpp"
#include "legch/z2_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace legch {

/// A linearized complex whose differential strictly lowers height.
class FilteredComplex {
public:
    FilteredComplex() = default;

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    int grading(GeneratorId id) const { return generators_.at(id).grading; }
    const Rational& height(GeneratorId id) const { return heights_.at(id); }
    const Z2Matrix& differential() const { return differential_; }

    // Generator ids sorted by (height, id): the column order of the reduction.
    std::vector<GeneratorId> filtration_order() const;

    friend FilteredComplex build_filtered_complex(const LinearizedComplex& lin, const HeightAssignment& heights);

private:
    std::vector<Generator> generators_;
    std::vector<Rational> heights_;
    Z2Matrix differential_;
};

// Throws height_violation naming the first pair (q, p) with p in d(q) and
// h(p) >= h(q); throws structural when a generator has no height.
FilteredComplex build_filtered_complex(const LinearizedComplex& lin, const HeightAssignment& heights);

/// Interval [birth, death) in one Maslov degree; death == nullopt is +inf.
struct Bar {
    int degree = 0;
    Rational birth;
    std::optional<Rational> death;
    std::optional<std::string> birth_label;
    std::optional<std::string> death_label;

    bool is_infinite() const { return !death.has_value(); }
    // Length (death - birth); only for finite bars.
    Rational length() const { return *death - birth; }
    bool contains(const Rational& t) const { return birth <= t && (!death || t < *death); }
};

struct Barcode {
    std::vector<Bar> bars;

    // Sorted by (degree, birth, death with inf last, labels).
    Barcode canonical() const;
    std::vector<int> degrees() const;
    bool same_intervals(const Barcode& other) const;
};

// Column reduction over Z2 in filtration order.  A pivot pair (p, q) gives the
// finite bar [h(p), h(q)) in degree |p|; an unpaired cycle q gives [h(q), inf).
// Labels are the representative cycle at birth and the killing chain at death.
Barcode compute_barcode(const FilteredComplex& complex);

// dim ker - dim im in `degree` for the subcomplex of generators with height
// <= t, by dense Gaussian elimination.  Cross-check for compute_barcode.
std::size_t homology_rank_oracle(const FilteredComplex& complex, int degree, const Rational& t);

// Number of bars in `degree` that contain t.
std::size_t bars_containing(const Barcode& barcode, int degree, const Rational& t);

} // namespace legch
