#pragma once

// Free noncommutative algebra over Z2 on a finite generating set, the
// differential on it, and the height filtration of its elements.

#include "legch/error.hpp"
#include "legch/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace legch {

using GeneratorId = std::uint32_t;

struct Generator {
    GeneratorId id = 0;
    std::string name;
    int grading = 0;

    bool operator==(const Generator&) const = default;
};

/// An ordered product of generators.  The empty word is the unit 1.
struct Word {
    std::vector<GeneratorId> letters;

    Word() = default;
    Word(std::initializer_list<GeneratorId> ids) : letters(ids) {}
    explicit Word(std::vector<GeneratorId> ids) : letters(std::move(ids)) {}

    static Word unit() { return Word(); }

    bool is_unit() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    bool contains(GeneratorId id) const;

    friend Word operator*(const Word& a, const Word& b);

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;
};

/// A formal Z2 sum of distinct words.  Adding a word already present removes it.
class Element {
public:
    Element() = default;
    Element(Word word) { words_.insert(std::move(word)); }
    Element(std::initializer_list<Word> words);

    static Element zero() { return Element(); }
    static Element unit() { return Element(Word::unit()); }
    static Element generator(GeneratorId id) { return Element(Word{id}); }

    bool is_zero() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }
    const std::set<Word>& words() const { return words_; }
    bool contains(const Word& word) const { return words_.count(word) != 0; }
    bool mentions(GeneratorId id) const;

    // Toggles the coefficient of `word`.
    void toggle(const Word& word);

    Element& operator+=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator*(const Element& a, const Element& b);

    bool operator==(const Element&) const = default;

private:
    std::set<Word> words_;
};

/// Generators with Maslov gradings and the value of the differential on each.
/// Construction enforces the structural invariants only; grading and
/// square-zero conditions are reported by validate_dga.
class DGA {
public:
    DGA() = default;
    DGA(std::vector<Generator> generators, std::vector<Element> differential);

    std::size_t size() const { return generators_.size(); }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(GeneratorId id) const;
    int grading(GeneratorId id) const { return generator(id).grading; }
    const std::string& name(GeneratorId id) const { return generator(id).name; }
    std::optional<GeneratorId> find(std::string_view name) const;

    const Element& differential(GeneratorId id) const;
    const std::vector<Element>& differentials() const { return differential_; }

    bool operator==(const DGA&) const = default;

private:
    std::vector<Generator> generators_;
    std::vector<Element> differential_;
};

/// Strictly positive heights keyed by generator id.
class HeightAssignment {
public:
    HeightAssignment() = default;
    explicit HeightAssignment(std::map<GeneratorId, Rational> heights);

    bool contains(GeneratorId id) const { return heights_.count(id) != 0; }
    const Rational& at(GeneratorId id) const;
    std::size_t size() const { return heights_.size(); }
    const std::map<GeneratorId, Rational>& entries() const { return heights_; }

    bool operator==(const HeightAssignment&) const = default;

private:
    std::map<GeneratorId, Rational> heights_;
};

int word_grading(const Word& word, const DGA& dga);

// Sum of letter heights; the unit word has height 0.
Rational height_of_word(const Word& word, const HeightAssignment& heights);

// Maximum over words; the zero element has height -inf.
ExtendedRational height_of_element(const Element& element, const HeightAssignment& heights);

// Leibniz extension of the generator-level differential.
Element apply_differential(const Element& element, const DGA& dga);

// Image of `element` under the algebra map sending generator i to images[i].
Element substitute(const Element& element, std::span<const Element> images);

struct DgaViolation {
    enum class Kind { grading_drop, nonzero_square };

    Kind kind;
    GeneratorId generator;
    std::optional<Word> word;  // offending word of the differential, for grading_drop
    std::string message;
};

struct DgaReport {
    std::vector<DgaViolation> violations;

    bool valid() const { return violations.empty(); }
};

DgaReport validate_dga(const DGA& dga);

// "1 + q3 + q5q4q3"; "0" for the zero element.
std::string format_word(const Word& word, const DGA& dga);
std::string format_element(const Element& element, const DGA& dga);

} // namespace legch
