#include "legch/transform.hpp"

#include <algorithm>

namespace legch {

namespace {

std::string fresh_name(const DGA& dga, const std::string& base, const std::string& avoid) {
    std::string name = base;
    while (dga.find(name) || name == avoid) {
        name += "'";
    }
    return name;
}

void check_automorphism(const DGA& dga, const ElementaryAutomorphism& phi) {
    if (phi.target >= dga.size()) {
        throw Error(ErrorCode::structural, "automorphism targets unknown generator id " + std::to_string(phi.target));
    }
    if (phi.addend.mentions(phi.target)) {
        throw Error(ErrorCode::precondition,
                    "addend of the automorphism of '" + dga.name(phi.target) + "' involves the target itself");
    }
    const int grading = dga.grading(phi.target);
    for (const Word& w : phi.addend.words()) {
        for (GeneratorId letter : w.letters) {
            if (letter >= dga.size()) {
                throw Error(ErrorCode::structural, "addend uses unknown generator id " + std::to_string(letter));
            }
        }
        if (word_grading(w, dga) != grading) {
            throw Error(ErrorCode::precondition, "addend word " + format_word(w, dga) + " has grading " +
                                                     std::to_string(word_grading(w, dga)) + ", target '" +
                                                     dga.name(phi.target) + "' has grading " + std::to_string(grading));
        }
    }
}

} // namespace

Stabilized stabilize(const DGA& dga, int k, const Rational& h_top, const Rational& h_bot,
                     const HeightAssignment& heights) {
    if (!(h_bot > 0) || !(h_top > h_bot)) {
        throw Error(ErrorCode::precondition, "stabilization needs h_top > h_bot > 0, got h_top = " +
                                                 to_exact_string(h_top) + ", h_bot = " + to_exact_string(h_bot));
    }
    std::vector<Generator> generators = dga.generators();
    std::vector<Element> differential = dga.differentials();

    const auto top = static_cast<GeneratorId>(generators.size());
    const auto bottom = static_cast<GeneratorId>(top + 1);
    const std::string top_name = fresh_name(dga, "e" + std::to_string(k), "");
    const std::string bottom_name = fresh_name(dga, "e" + std::to_string(k - 1), top_name);
    generators.push_back({top, top_name, k});
    generators.push_back({bottom, bottom_name, k - 1});
    differential.push_back(Element::generator(bottom));
    differential.push_back(Element::zero());

    std::map<GeneratorId, Rational> h = heights.entries();
    h[top] = h_top;
    h[bottom] = h_bot;
    return {DGA(std::move(generators), std::move(differential)), HeightAssignment(std::move(h)), top, bottom};
}

Element apply_automorphism(const ElementaryAutomorphism& phi, const Element& element) {
    GeneratorId largest = phi.target;
    for (const Word& w : element.words()) {
        for (GeneratorId letter : w.letters) {
            largest = std::max(largest, letter);
        }
    }
    std::vector<Element> images;
    images.reserve(largest + 1);
    for (GeneratorId id = 0; id <= largest; ++id) {
        images.push_back(Element::generator(id));
    }
    images[phi.target] += phi.addend;
    return substitute(element, images);
}

DGA apply_elementary(const DGA& dga, const ElementaryAutomorphism& phi) {
    check_automorphism(dga, phi);
    std::vector<Element> differential;
    differential.reserve(dga.size());
    for (const Generator& g : dga.generators()) {
        // phi^{-1} = phi, and phi moves only the target.
        Element inner = dga.differential(g.id);
        if (g.id == phi.target) {
            inner += apply_differential(phi.addend, dga);
        }
        differential.push_back(apply_automorphism(phi, inner));
    }
    return DGA(dga.generators(), std::move(differential));
}

bool is_semimonotonic(const ElementaryAutomorphism& phi, const HeightAssignment& heights) {
    if (phi.addend.is_zero()) {
        return true;
    }
    const Rational& ceiling = heights.at(phi.target);
    for (const Word& w : phi.addend.words()) {
        for (GeneratorId letter : w.letters) {
            if (!(heights.at(letter) < ceiling)) {
                return false;
            }
        }
    }
    return true;
}

Z2Matrix induced_linear_map(const DGA& dga, const ElementaryAutomorphism& phi, const Augmentation& eps) {
    check_automorphism(dga, phi);
    if (auto defect = augmentation_defect(dga, eps)) {
        throw Error(ErrorCode::precondition, *defect);
    }
    Z2Matrix map = Z2Matrix::identity(dga.size());
    map.set_column(phi.target, z2_add({phi.target}, linear_part(phi.addend, eps)));
    return map;
}

Augmentation pull_back_augmentation(const ElementaryAutomorphism& phi, const Augmentation& eps) {
    std::vector<std::uint8_t> values = eps.values();
    values.at(phi.target) ^= evaluate(eps, phi.addend);
    return Augmentation(std::move(values));
}

DGA apply_tame(const DGA& dga, const TameIsomorphism& iso) {
    DGA current = dga;
    for (const ElementaryAutomorphism& step : iso.steps) {
        current = apply_elementary(current, step);
    }
    const std::size_t n = current.size();
    if (iso.relabel.size() != n) {
        throw Error(ErrorCode::precondition, "relabelling covers " + std::to_string(iso.relabel.size()) + " of " +
                                                 std::to_string(n) + " generators");
    }
    std::vector<bool> hit(n, false);
    for (GeneratorId target : iso.relabel) {
        if (target >= n || hit[target]) {
            throw Error(ErrorCode::precondition, "relabelling is not a bijection");
        }
        hit[target] = true;
    }

    std::vector<Element> images;
    images.reserve(n);
    for (GeneratorId id = 0; id < n; ++id) {
        images.push_back(Element::generator(iso.relabel[id]));
    }
    std::vector<Generator> generators(n);
    std::vector<Element> differential(n);
    for (const Generator& g : current.generators()) {
        const GeneratorId to = iso.relabel[g.id];
        generators[to] = {to, g.name, g.grading};
        differential[to] = substitute(current.differential(g.id), images);
    }
    return DGA(std::move(generators), std::move(differential));
}

} // namespace legch
