#include "legch/z2_matrix.hpp"

#include <algorithm>
#include <iterator>

namespace legch {

Z2Vector z2_add(const Z2Vector& a, const Z2Vector& b) {
    Z2Vector out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Z2Matrix Z2Matrix::identity(std::size_t dim) {
    Z2Matrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        m.columns_[j] = {static_cast<GeneratorId>(j)};
    }
    return m;
}

void Z2Matrix::set_column(std::size_t j, Z2Vector column) {
    std::sort(column.begin(), column.end());
    // Repeated indices cancel in pairs.
    Z2Vector reduced;
    for (std::size_t i = 0; i < column.size();) {
        std::size_t k = i;
        while (k < column.size() && column[k] == column[i]) {
            ++k;
        }
        if ((k - i) % 2 == 1) {
            reduced.push_back(column[i]);
        }
        i = k;
    }
    columns_.at(j) = std::move(reduced);
}

bool Z2Matrix::at(std::size_t row, std::size_t col) const {
    const Z2Vector& c = columns_.at(col);
    return std::binary_search(c.begin(), c.end(), static_cast<GeneratorId>(row));
}

void Z2Matrix::toggle(std::size_t row, std::size_t col) {
    columns_.at(col) = z2_add(columns_.at(col), {static_cast<GeneratorId>(row)});
}

Z2Vector Z2Matrix::apply(const Z2Vector& v) const {
    Z2Vector out;
    for (GeneratorId j : v) {
        out = z2_add(out, columns_.at(j));
    }
    return out;
}

bool Z2Matrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Z2Vector& c) { return c.empty(); });
}

Z2Matrix operator*(const Z2Matrix& a, const Z2Matrix& b) {
    Z2Matrix out(b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        out.columns_[j] = a.apply(b.columns_[j]);
    }
    return out;
}

} // namespace legch
