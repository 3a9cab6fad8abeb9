#include "legch/augment.hpp"

namespace legch {

Augmentation::Augmentation(std::vector<std::uint8_t> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > 1) {
            throw Error(ErrorCode::precondition,
                        "augmentation value of generator " + std::to_string(i) + " must be 0 or 1");
        }
    }
}

std::uint8_t Augmentation::value(GeneratorId id) const {
    if (id >= values_.size()) {
        throw Error(ErrorCode::structural, "augmentation has no value for generator " + std::to_string(id));
    }
    return values_[id];
}

std::uint8_t evaluate(const Augmentation& eps, const Element& element) {
    std::uint8_t total = 0;
    for (const Word& w : element.words()) {
        std::uint8_t product = 1;
        for (GeneratorId letter : w.letters) {
            product &= eps.value(letter);
        }
        total ^= product;
    }
    return total;
}

std::optional<std::string> augmentation_defect(const DGA& dga, const Augmentation& eps) {
    if (eps.size() != dga.size()) {
        return "augmentation has " + std::to_string(eps.size()) + " values for " + std::to_string(dga.size()) +
               " generators";
    }
    for (const Generator& g : dga.generators()) {
        if (g.grading != 0 && eps.value(g.id) != 0) {
            return "augmentation is nonzero on '" + g.name + "' of grading " + std::to_string(g.grading);
        }
    }
    for (const Generator& g : dga.generators()) {
        if (evaluate(eps, dga.differential(g.id)) != 0) {
            return "augmentation does not vanish on d(" + g.name + ")";
        }
    }
    return std::nullopt;
}

std::vector<Augmentation> enumerate_augmentations(const DGA& dga) {
    std::vector<GeneratorId> free_ids;
    for (const Generator& g : dga.generators()) {
        if (g.grading == 0) {
            free_ids.push_back(g.id);
        }
    }
    if (free_ids.size() > max_augmentation_search_bits) {
        throw Error(ErrorCode::precondition,
                    std::to_string(free_ids.size()) + " generators of grading 0 exceed the search limit of " +
                        std::to_string(max_augmentation_search_bits));
    }

    std::vector<GeneratorId> constrained;
    for (const Generator& g : dga.generators()) {
        if (!dga.differential(g.id).is_zero()) {
            constrained.push_back(g.id);
        }
    }

    std::vector<Augmentation> result;
    const std::uint64_t count = std::uint64_t{1} << free_ids.size();
    std::vector<std::uint8_t> values(dga.size(), 0);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t bit = 0; bit < free_ids.size(); ++bit) {
            values[free_ids[bit]] = static_cast<std::uint8_t>((mask >> bit) & 1U);
        }
        Augmentation candidate(values);
        bool ok = true;
        for (GeneratorId id : constrained) {
            if (evaluate(candidate, dga.differential(id)) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.push_back(std::move(candidate));
        }
    }
    return result;
}

Z2Vector linear_part(const Element& element, const Augmentation& eps) {
    Z2Vector out;
    for (const Word& w : element.words()) {
        const std::size_t k = w.length();
        for (std::size_t l = 0; l < k; ++l) {
            std::uint8_t coefficient = 1;
            for (std::size_t m = 0; m < k && coefficient; ++m) {
                if (m != l) {
                    coefficient &= eps.value(w.letters[m]);
                }
            }
            if (coefficient) {
                out = z2_add(out, {w.letters[l]});
            }
        }
    }
    return out;
}

LinearizedComplex linearized_differential(const DGA& dga, const Augmentation& eps) {
    if (auto defect = augmentation_defect(dga, eps)) {
        throw Error(ErrorCode::precondition, *defect);
    }
    LinearizedComplex lin;
    lin.generators = dga.generators();
    lin.differential = Z2Matrix(dga.size());
    for (const Generator& g : dga.generators()) {
        lin.differential.set_column(g.id, linear_part(dga.differential(g.id), eps));
    }
    return lin;
}

} // namespace legch
