#pragma once

#include "legch/algebra.hpp"
#include "legch/z2_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace legch {

/// Algebra map to Z2, stored as its value (0 or 1) on each generator.
class Augmentation {
public:
    Augmentation() = default;
    explicit Augmentation(std::vector<std::uint8_t> values);

    // All-zero assignment on n generators.
    static Augmentation zero(std::size_t n) { return Augmentation(std::vector<std::uint8_t>(n, 0)); }

    std::uint8_t value(GeneratorId id) const;
    std::size_t size() const { return values_.size(); }
    const std::vector<std::uint8_t>& values() const { return values_; }

    bool operator==(const Augmentation&) const = default;

private:
    std::vector<std::uint8_t> values_;
};

// Unit word -> 1, word -> product of letter values, summed mod 2.
std::uint8_t evaluate(const Augmentation& eps, const Element& element);

// Reason `eps` is not an augmentation of `dga`, or nullopt when it is one.
std::optional<std::string> augmentation_defect(const DGA& dga, const Augmentation& eps);

inline bool is_augmentation(const DGA& dga, const Augmentation& eps) {
    return !augmentation_defect(dga, eps).has_value();
}

// Exhaustive search is limited to this many grading-0 generators.
inline constexpr std::size_t max_augmentation_search_bits = 24;

// Every augmentation of `dga`.  The i-th grading-0 generator (in id order) is
// bit i of a counter running from 0 to 2^m - 1, and results come out in counter
// order, so indices are stable across runs.
std::vector<Augmentation> enumerate_augmentations(const DGA& dga);

// Length-one part of phi^eps applied to `element`, where phi^eps(q) = q + eps(q):
// each word q_{i1}...q_{ik} contributes sum_l (prod_{m != l} eps(q_{im})) q_{il}.
Z2Vector linear_part(const Element& element, const Augmentation& eps);

struct LinearizedComplex {
    std::vector<Generator> generators;
    Z2Matrix differential;  // column q holds the linearized differential of q

    int grading(GeneratorId id) const { return generators.at(id).grading; }
    std::size_t size() const { return generators.size(); }
};

LinearizedComplex linearized_differential(const DGA& dga, const Augmentation& eps);

} // namespace legch
