#include "random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace legch::testing {

namespace {

using Columns = std::vector<std::set<GeneratorId>>;

void toggle(std::set<GeneratorId>& column, GeneratorId id) {
    if (!column.erase(id)) {
        column.insert(id);
    }
}

// D -> E D E with E = I + (x_i -> x_i + x_j).  E squares to the identity.
void conjugate(Columns& d, GeneratorId i, GeneratorId j) {
    // D E: column i picks up column j.
    for (GeneratorId p : std::set<GeneratorId>(d[j])) {
        toggle(d[i], p);
    }
    // E D: every column containing x_i also gets x_j.
    for (auto& column : d) {
        if (column.count(i)) {
            toggle(column, j);
        }
    }
}

} // namespace

RandomComplex random_complex(Rng& rng, int max_generators, bool thirds) {
    const int n = rng.uniform(1, max_generators);
    const int denominator = thirds ? 3 : 2;
    std::vector<int> grading(static_cast<std::size_t>(n));
    std::vector<Rational> height(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> pairs;  // (low, high) indices before shuffling

    int next = 0;
    while (next < n) {
        if (next + 1 < n && rng.coin(0.6)) {
            const int g = rng.uniform(0, 2);
            const int lo = rng.uniform(1, 12);
            const int hi = lo + rng.uniform(1, 8);
            grading[static_cast<std::size_t>(next)] = g - 1;
            grading[static_cast<std::size_t>(next + 1)] = g;
            height[static_cast<std::size_t>(next)] = Rational(lo, denominator);
            height[static_cast<std::size_t>(next + 1)] = Rational(hi, denominator);
            pairs.emplace_back(next, next + 1);
            next += 2;
        } else {
            grading[static_cast<std::size_t>(next)] = rng.uniform(-1, 2);
            height[static_cast<std::size_t>(next)] = Rational(rng.uniform(1, 20), denominator);
            ++next;
        }
    }

    std::vector<GeneratorId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), GeneratorId{0});
    std::shuffle(perm.begin(), perm.end(), rng.engine());

    Columns d(static_cast<std::size_t>(n));
    std::vector<int> g_of(static_cast<std::size_t>(n));
    std::map<GeneratorId, Rational> h_of;
    for (int i = 0; i < n; ++i) {
        g_of[perm[static_cast<std::size_t>(i)]] = grading[static_cast<std::size_t>(i)];
        h_of[perm[static_cast<std::size_t>(i)]] = height[static_cast<std::size_t>(i)];
    }
    for (const auto& [lo, hi] : pairs) {
        d[perm[static_cast<std::size_t>(hi)]].insert(perm[static_cast<std::size_t>(lo)]);
    }

    const int steps = rng.uniform(0, 3 * n);
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<GeneratorId>(rng.uniform(0, n - 1));
        const auto j = static_cast<GeneratorId>(rng.uniform(0, n - 1));
        if (i != j && g_of[i] == g_of[j] && h_of[j] <= h_of[i]) {
            conjugate(d, i, j);
        }
    }

    std::vector<Generator> generators;
    std::vector<Element> differential;
    for (int i = 0; i < n; ++i) {
        const auto id = static_cast<GeneratorId>(i);
        generators.push_back({id, "x" + std::to_string(i), g_of[id]});
        Element e;
        for (GeneratorId p : d[id]) {
            e.toggle(Word{p});
        }
        differential.push_back(std::move(e));
    }
    return {DGA(std::move(generators), std::move(differential)), HeightAssignment(std::move(h_of)),
            Augmentation::zero(static_cast<std::size_t>(n))};
}

RandomComplex random_nonlinear(Rng& rng, int max_generators) {
    RandomComplex c = random_complex(rng, max_generators);
    const std::size_t n = c.dga.size();
    // Random values on grading 0, kept only if they happen to augment.
    std::vector<std::uint8_t> values(n, 0);
    for (const Generator& g : c.dga.generators()) {
        if (g.grading == 0 && rng.coin()) {
            values[g.id] = 1;
        }
    }
    Augmentation eps(values);
    if (!is_augmentation(c.dga, eps)) {
        eps = c.eps;
    }
    c.eps = eps;

    const int steps = rng.uniform(1, 4);
    for (int s = 0; s < steps; ++s) {
        const auto target = static_cast<GeneratorId>(rng.uniform(0, static_cast<int>(n) - 1));
        const int g = c.dga.grading(target);
        Element addend;
        const int words = rng.uniform(1, 3);
        for (int w = 0; w < words; ++w) {
            // A word of length 1..3 with total grading g avoiding the target.
            for (int attempt = 0; attempt < 20; ++attempt) {
                const int length = rng.uniform(1, 3);
                Word word;
                int total = 0;
                for (int l = 0; l < length; ++l) {
                    const auto letter = static_cast<GeneratorId>(rng.uniform(0, static_cast<int>(n) - 1));
                    word.letters.push_back(letter);
                    total += c.dga.grading(letter);
                }
                if (total == g && !word.contains(target)) {
                    addend.toggle(word);
                    break;
                }
            }
        }
        if (g == 0 && rng.coin(0.3)) {
            addend.toggle(Word::unit());
        }
        const ElementaryAutomorphism phi{target, addend};
        c.dga = apply_elementary(c.dga, phi);
        c.eps = pull_back_augmentation(phi, c.eps);
    }
    return c;
}

InequalitySystem random_system(Rng& rng, int n) {
    const std::vector<int> coefficients{-2, -1, 1, 2};
    InequalitySystem system;
    const int m = rng.uniform(1, n + 2);
    for (int i = 0; i < m; ++i) {
        // a patch meets each crossing at most once
        std::vector<GeneratorId> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), GeneratorId{0});
        std::shuffle(pool.begin(), pool.end(), rng.engine());
        std::vector<Corner> terms;
        const int k = rng.uniform(1, std::min(3, n));
        for (int t = 0; t < k; ++t) {
            terms.push_back({pool[static_cast<std::size_t>(t)], rng.pick(coefficients)});
        }
        LinearForm form = make_linear_form(std::move(terms));
        if (!form.terms.empty()) {
            system.inequalities.push_back(std::move(form));
        }
    }
    return system;
}

Barcode random_barcode(Rng& rng, int max_bars) {
    Barcode b;
    const int count = rng.uniform(0, max_bars);
    for (int i = 0; i < count; ++i) {
        Bar bar;
        bar.degree = rng.uniform(0, 1);
        bar.birth = Rational(rng.uniform(0, 24), 4);
        if (rng.coin(0.75)) {
            bar.death = bar.birth + Rational(rng.uniform(1, 16), 4);
        }
        b.bars.push_back(std::move(bar));
    }
    return b;
}

std::vector<Rational> sample_levels(Rng& rng, const FilteredComplex& fc, std::size_t count) {
    std::set<Rational> heights;
    for (const Generator& g : fc.generators()) {
        heights.insert(fc.height(g.id));
    }
    std::vector<Rational> levels;
    if (!heights.empty()) {
        levels.push_back(*heights.begin() - 1);
        levels.push_back(*heights.rbegin() + 1);
        for (auto it = heights.begin(); it != heights.end(); ++it) {
            levels.push_back(*it);
            if (auto next = std::next(it); next != heights.end()) {
                levels.push_back((*it + *next) / 2);
            }
        }
    }
    while (levels.size() < count) {
        levels.push_back(Rational(rng.uniform(0, 120), rng.uniform(1, 6)));
    }
    levels.resize(count);
    return levels;
}

} // namespace legch::testing
