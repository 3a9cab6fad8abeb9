#pragma once

#include "legch/algebra.hpp"

#include <cstddef>
#include <vector>

namespace legch {

// Sparse Z2 vector: sorted, duplicate-free list of basis indices.
using Z2Vector = std::vector<GeneratorId>;

Z2Vector z2_add(const Z2Vector& a, const Z2Vector& b);

/// Square Z2 matrix on the span of n generators, stored by columns.
/// Column j is the image of basis vector j.
class Z2Matrix {
public:
    Z2Matrix() = default;
    explicit Z2Matrix(std::size_t dim) : columns_(dim) {}

    static Z2Matrix identity(std::size_t dim);

    std::size_t dim() const { return columns_.size(); }
    const Z2Vector& column(std::size_t j) const { return columns_.at(j); }
    void set_column(std::size_t j, Z2Vector column);
    bool at(std::size_t row, std::size_t col) const;
    void toggle(std::size_t row, std::size_t col);

    Z2Vector apply(const Z2Vector& v) const;
    bool is_zero() const;

    friend Z2Matrix operator*(const Z2Matrix& a, const Z2Matrix& b);
    bool operator==(const Z2Matrix&) const = default;

private:
    std::vector<Z2Vector> columns_;
};

} // namespace legch
