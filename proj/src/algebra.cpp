#include "legch/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace legch {

bool Word::contains(GeneratorId id) const {
    return std::find(letters.begin(), letters.end(), id) != letters.end();
}

Word operator*(const Word& a, const Word& b) {
    Word result;
    result.letters.reserve(a.letters.size() + b.letters.size());
    result.letters.insert(result.letters.end(), a.letters.begin(), a.letters.end());
    result.letters.insert(result.letters.end(), b.letters.begin(), b.letters.end());
    return result;
}

Element::Element(std::initializer_list<Word> words) {
    for (const Word& w : words) {
        toggle(w);
    }
}

bool Element::mentions(GeneratorId id) const {
    return std::any_of(words_.begin(), words_.end(), [id](const Word& w) { return w.contains(id); });
}

void Element::toggle(const Word& word) {
    auto [it, inserted] = words_.insert(word);
    if (!inserted) {
        words_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    for (const Word& w : other.words_) {
        toggle(w);
    }
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element result;
    for (const Word& x : a.words_) {
        for (const Word& y : b.words_) {
            result.toggle(x * y);
        }
    }
    return result;
}

DGA::DGA(std::vector<Generator> generators, std::vector<Element> differential)
    : generators_(std::move(generators)), differential_(std::move(differential)) {
    std::unordered_set<std::string> names;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const Generator& g = generators_[i];
        if (g.id != i) {
            throw Error(ErrorCode::structural,
                        "generator '" + g.name + "' has id " + std::to_string(g.id) +
                            ", expected contiguous id " + std::to_string(i));
        }
        if (g.name.empty()) {
            throw Error(ErrorCode::structural, "generator " + std::to_string(i) + " has an empty name");
        }
        if (!names.insert(g.name).second) {
            throw Error(ErrorCode::duplicate_generator, "duplicate generator name '" + g.name + "'");
        }
    }
    if (differential_.size() != generators_.size()) {
        throw Error(ErrorCode::structural,
                    "differential defined on " + std::to_string(differential_.size()) + " of " +
                        std::to_string(generators_.size()) + " generators");
    }
    for (std::size_t i = 0; i < differential_.size(); ++i) {
        for (const Word& w : differential_[i].words()) {
            for (GeneratorId letter : w.letters) {
                if (letter >= generators_.size()) {
                    throw Error(ErrorCode::structural,
                                "differential of '" + generators_[i].name + "' uses unknown generator id " +
                                    std::to_string(letter));
                }
            }
        }
    }
}

const Generator& DGA::generator(GeneratorId id) const {
    if (id >= generators_.size()) {
        throw Error(ErrorCode::structural, "unknown generator id " + std::to_string(id));
    }
    return generators_[id];
}

std::optional<GeneratorId> DGA::find(std::string_view name) const {
    for (const Generator& g : generators_) {
        if (g.name == name) {
            return g.id;
        }
    }
    return std::nullopt;
}

const Element& DGA::differential(GeneratorId id) const {
    if (id >= differential_.size()) {
        throw Error(ErrorCode::structural, "unknown generator id " + std::to_string(id));
    }
    return differential_[id];
}

HeightAssignment::HeightAssignment(std::map<GeneratorId, Rational> heights) : heights_(std::move(heights)) {
    for (const auto& [id, h] : heights_) {
        if (h <= 0) {
            throw Error(ErrorCode::invalid_height,
                        "height of generator " + std::to_string(id) + " must be positive, got " +
                            to_exact_string(h));
        }
    }
}

const Rational& HeightAssignment::at(GeneratorId id) const {
    auto it = heights_.find(id);
    if (it == heights_.end()) {
        throw Error(ErrorCode::structural, "no height assigned to generator " + std::to_string(id));
    }
    return it->second;
}

int word_grading(const Word& word, const DGA& dga) {
    int total = 0;
    for (GeneratorId letter : word.letters) {
        total += dga.grading(letter);
    }
    return total;
}

Rational height_of_word(const Word& word, const HeightAssignment& heights) {
    Rational total = 0;
    for (GeneratorId letter : word.letters) {
        total += heights.at(letter);
    }
    return total;
}

ExtendedRational height_of_element(const Element& element, const HeightAssignment& heights) {
    ExtendedRational best = ExtendedRational::negative_infinity();
    for (const Word& w : element.words()) {
        ExtendedRational h(height_of_word(w, heights));
        if (h > best) {
            best = h;
        }
    }
    return best;
}

Element apply_differential(const Element& element, const DGA& dga) {
    Element result;
    for (const Word& w : element.words()) {
        for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
            Word prefix(std::vector<GeneratorId>(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos)));
            Word suffix(std::vector<GeneratorId>(w.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.letters.end()));
            for (const Word& d : dga.differential(w.letters[pos]).words()) {
                result.toggle(prefix * d * suffix);
            }
        }
    }
    return result;
}

Element substitute(const Element& element, std::span<const Element> images) {
    Element result;
    for (const Word& w : element.words()) {
        Element product = Element::unit();
        for (GeneratorId letter : w.letters) {
            if (letter >= images.size()) {
                throw Error(ErrorCode::structural, "no image given for generator id " + std::to_string(letter));
            }
            product = product * images[letter];
            if (product.is_zero()) {
                break;
            }
        }
        result += product;
    }
    return result;
}

DgaReport validate_dga(const DGA& dga) {
    DgaReport report;
    for (const Generator& g : dga.generators()) {
        const Element& d = dga.differential(g.id);
        for (const Word& w : d.words()) {
            const int grading = word_grading(w, dga);
            if (grading != g.grading - 1) {
                report.violations.push_back(
                    {DgaViolation::Kind::grading_drop, g.id, w,
                     "word " + format_word(w, dga) + " in d(" + g.name + ") has grading " + std::to_string(grading) +
                         ", expected " + std::to_string(g.grading - 1)});
            }
        }
    }
    for (const Generator& g : dga.generators()) {
        Element dd = apply_differential(dga.differential(g.id), dga);
        if (!dd.is_zero()) {
            report.violations.push_back({DgaViolation::Kind::nonzero_square, g.id, std::nullopt,
                                         "d(d(" + g.name + ")) = " + format_element(dd, dga) + " is not zero"});
        }
    }
    return report;
}

std::string format_word(const Word& word, const DGA& dga) {
    if (word.is_unit()) {
        return "1";
    }
    std::string out;
    for (GeneratorId letter : word.letters) {
        out += dga.name(letter);
    }
    return out;
}

std::string format_element(const Element& element, const DGA& dga) {
    if (element.is_zero()) {
        return "0";
    }
    std::string out;
    for (const Word& w : element.words()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += format_word(w, dga);
    }
    return out;
}

} // namespace legch
