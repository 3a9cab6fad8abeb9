#include "legch/persist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace legch {

namespace {

std::string format_chain(const Z2Vector& chain, const std::vector<Generator>& generators) {
    std::string out;
    for (GeneratorId id : chain) {
        if (!out.empty()) {
            out += "+";
        }
        out += generators.at(id).name;
    }
    return out;
}

// Rank over Z2 of the dense matrix given as rows of 0/1 entries.
std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c]) {
                for (std::size_t k = c; k < cols; ++k) {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

// Rank of d restricted to `sources`, as a map into the span of `targets`.
std::size_t restricted_rank(const Z2Matrix& d, const std::vector<GeneratorId>& sources,
                            const std::vector<GeneratorId>& targets) {
    if (sources.empty() || targets.empty()) {
        return 0;
    }
    std::map<GeneratorId, std::size_t> row_of;
    for (std::size_t r = 0; r < targets.size(); ++r) {
        row_of[targets[r]] = r;
    }
    std::vector<std::vector<std::uint8_t>> rows(targets.size(), std::vector<std::uint8_t>(sources.size(), 0));
    for (std::size_t c = 0; c < sources.size(); ++c) {
        for (GeneratorId p : d.column(sources[c])) {
            auto it = row_of.find(p);
            if (it != row_of.end()) {
                rows[it->second][c] = 1;
            }
        }
    }
    return dense_rank(std::move(rows));
}

} // namespace

std::vector<GeneratorId> FilteredComplex::filtration_order() const {
    std::vector<GeneratorId> order(generators_.size());
    std::iota(order.begin(), order.end(), GeneratorId{0});
    std::stable_sort(order.begin(), order.end(),
                     [this](GeneratorId a, GeneratorId b) { return heights_[a] < heights_[b]; });
    return order;
}

FilteredComplex build_filtered_complex(const LinearizedComplex& lin, const HeightAssignment& heights) {
    FilteredComplex fc;
    fc.generators_ = lin.generators;
    fc.differential_ = lin.differential;
    fc.heights_.reserve(lin.size());
    for (const Generator& g : lin.generators) {
        if (!heights.contains(g.id)) {
            throw Error(ErrorCode::structural, "no height assigned to generator '" + g.name + "'");
        }
        fc.heights_.push_back(heights.at(g.id));
    }
    for (const Generator& g : lin.generators) {
        for (GeneratorId p : lin.differential.column(g.id)) {
            if (!(fc.heights_[p] < fc.heights_[g.id])) {
                throw Error(ErrorCode::height_violation,
                            "differential of '" + g.name + "' (height " + to_decimal_string(fc.heights_[g.id]) +
                                ") contains '" + lin.generators.at(p).name + "' (height " +
                                to_decimal_string(fc.heights_[p]) + "); heights must strictly decrease");
            }
        }
    }
    return fc;
}

Barcode compute_barcode(const FilteredComplex& complex) {
    const std::size_t n = complex.size();
    const std::vector<GeneratorId> order = complex.filtration_order();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[order[i]] = i;
    }

    // Columns in filtration positions: reduced boundary R and chain V with d(V) = R.
    std::vector<Z2Vector> reduced(n);
    std::vector<Z2Vector> chain(n);
    std::vector<std::optional<std::size_t>> column_with_low(n);

    for (std::size_t j = 0; j < n; ++j) {
        const GeneratorId q = order[j];
        Z2Vector col;
        for (GeneratorId p : complex.differential().column(q)) {
            col.push_back(static_cast<GeneratorId>(position[p]));
        }
        std::sort(col.begin(), col.end());
        Z2Vector v{static_cast<GeneratorId>(j)};
        while (!col.empty() && column_with_low[col.back()]) {
            const std::size_t other = *column_with_low[col.back()];
            col = z2_add(col, reduced[other]);
            v = z2_add(v, chain[other]);
        }
        if (!col.empty()) {
            column_with_low[col.back()] = j;
        }
        reduced[j] = std::move(col);
        chain[j] = std::move(v);
    }

    auto to_ids = [&order](const Z2Vector& positions) {
        Z2Vector ids;
        for (GeneratorId pos : positions) {
            ids.push_back(order[pos]);
        }
        std::sort(ids.begin(), ids.end());
        return ids;
    };

    Barcode barcode;
    for (std::size_t i = 0; i < n; ++i) {
        const GeneratorId q = order[i];
        if (column_with_low[i]) {
            const std::size_t killer = *column_with_low[i];
            Bar bar;
            bar.degree = complex.grading(q);
            bar.birth = complex.height(q);
            bar.death = complex.height(order[killer]);
            bar.birth_label = format_chain(to_ids(reduced[killer]), complex.generators());
            bar.death_label = format_chain(to_ids(chain[killer]), complex.generators());
            barcode.bars.push_back(std::move(bar));
        } else if (reduced[i].empty()) {
            Bar bar;
            bar.degree = complex.grading(q);
            bar.birth = complex.height(q);
            bar.birth_label = format_chain(to_ids(chain[i]), complex.generators());
            barcode.bars.push_back(std::move(bar));
        }
    }
    return barcode;
}

std::size_t homology_rank_oracle(const FilteredComplex& complex, int degree, const Rational& t) {
    std::vector<GeneratorId> below, at, above;
    for (const Generator& g : complex.generators()) {
        if (complex.height(g.id) > t) {
            continue;
        }
        if (g.grading == degree - 1) {
            below.push_back(g.id);
        } else if (g.grading == degree) {
            at.push_back(g.id);
        } else if (g.grading == degree + 1) {
            above.push_back(g.id);
        }
    }
    const std::size_t kernel = at.size() - restricted_rank(complex.differential(), at, below);
    const std::size_t image = restricted_rank(complex.differential(), above, at);
    return kernel - image;
}

std::size_t bars_containing(const Barcode& barcode, int degree, const Rational& t) {
    return static_cast<std::size_t>(std::count_if(barcode.bars.begin(), barcode.bars.end(), [&](const Bar& b) {
        return b.degree == degree && b.contains(t);
    }));
}

Barcode Barcode::canonical() const {
    Barcode out = *this;
    std::sort(out.bars.begin(), out.bars.end(), [](const Bar& a, const Bar& b) {
        if (a.degree != b.degree) {
            return a.degree < b.degree;
        }
        if (a.birth != b.birth) {
            return a.birth < b.birth;
        }
        if (a.is_infinite() != b.is_infinite()) {
            return b.is_infinite();
        }
        if (!a.is_infinite() && *a.death != *b.death) {
            return *a.death < *b.death;
        }
        return std::tie(a.birth_label, a.death_label) < std::tie(b.birth_label, b.death_label);
    });
    return out;
}

std::vector<int> Barcode::degrees() const {
    std::vector<int> out;
    for (const Bar& b : bars) {
        out.push_back(b.degree);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Barcode::same_intervals(const Barcode& other) const {
    if (bars.size() != other.bars.size()) {
        return false;
    }
    const Barcode a = canonical();
    const Barcode b = other.canonical();
    // Labels are ignored; the canonical order only breaks ties on labels,
    // so compare interval triples as multisets.
    auto key = [](const Bar& bar) { return std::make_tuple(bar.degree, bar.birth, bar.death.has_value(), bar.death.value_or(0)); };
    std::vector<decltype(key(a.bars.front()))> ka, kb;
    for (const Bar& bar : a.bars) {
        ka.push_back(key(bar));
    }
    for (const Bar& bar : b.bars) {
        kb.push_back(key(bar));
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

} // namespace legch
