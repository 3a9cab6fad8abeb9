#include <doctest.h>

#include "corpus.hpp"
#include "random.hpp"

#include "legch/diagram.hpp"

#include <algorithm>
#include <numeric>

using namespace legch;
using namespace legch::testing;

namespace {

std::vector<GeneratorId> ids(std::size_t n) {
    std::vector<GeneratorId> out(n);
    std::iota(out.begin(), out.end(), GeneratorId{0});
    return out;
}

LinearForm form(std::vector<Corner> terms) {
    return make_linear_form(std::move(terms));
}

} // namespace

TEST_SUITE("diagram") {

TEST_CASE("unknot patches") {
    const KnotData k = load_corpus("unknot.json");
    const InequalitySystem sys = area_inequalities(k.diagram);
    REQUIRE(sys.inequalities.size() == 2);
    CHECK(sys.inequalities[0] == form({{0, 1}}));
    CHECK(sys.inequalities[1] == form({{0, 1}}));
}

TEST_CASE("trefoil topmost patch") {
    const KnotData k = load_corpus("trefoil.json");
    const InequalitySystem sys = area_inequalities(k.diagram);
    CHECK(sys.inequalities[0] == form({{0, 1}, {2, -1}, {3, -1}, {4, -1}}));
}

TEST_CASE("island inequalities") {
    const KnotData k = load_corpus("island.json");
    const InequalitySystem sys = area_inequalities(k.diagram);
    REQUIRE(sys.inequalities.size() == 10);
    // h2 - h3 + h5 - h7 - h9 > 0, with ids shifted down by one
    CHECK(sys.inequalities[3] == form({{1, 1}, {2, -1}, {4, 1}, {6, -1}, {8, -1}}));
}

TEST_CASE("linear forms fold repeats") {
    const LinearForm f = form({{1, 1}, {0, 2}, {1, -1}, {0, -1}});
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms.front() == Corner{0, 1});
    CHECK(f.coefficient(1) == 0);
}

TEST_CASE("patch validation") {
    CHECK_THROWS_AS(LagrangianDiagramData({0}, {AreaPatch{{{1, 1}}}}, false), Error);
    CHECK_THROWS_AS(LagrangianDiagramData({0}, {AreaPatch{{{0, 3}}}}, false), Error);
    CHECK_THROWS_AS(LagrangianDiagramData({0}, {AreaPatch{{{0, 1}, {0, 1}}}}, false), Error);
    CHECK_NOTHROW(LagrangianDiagramData({0, 1}, {AreaPatch{{{0, 2}, {1, -2}}}}, true));
}

TEST_CASE("flooding the island fails") {
    const KnotData k = load_corpus("island.json");
    const Tiering t = flood(area_inequalities(k.diagram), k.diagram.crossings());
    CHECK_FALSE(t.succeeded());
    REQUIRE(t.tiers.size() == 2);
    CHECK(t.tiers[0] == std::vector<GeneratorId>{0, 1});
    CHECK(t.tiers[1] == std::vector<GeneratorId>{2});
    CHECK(t.unassigned == std::vector<GeneratorId>{3, 4, 5, 6, 7, 8});
    CHECK_THROWS_AS(assign_heights(t), Error);
}

TEST_CASE("single inequality") {
    const Tiering t = flood({{form({{0, 1}})}}, ids(1));
    REQUIRE(t.succeeded());
    REQUIRE(t.tiers.size() == 2);
    CHECK(t.tiers[0] == std::vector<GeneratorId>{0});
    CHECK(t.tiers[1].empty());
    const HeightAssignment h = assign_heights(t);
    CHECK(h.at(0) == 1);
}

TEST_CASE("chain of two") {
    const Tiering t = flood({{form({{0, 1}, {1, -1}}), form({{1, 1}})}}, ids(2));
    REQUIRE(t.succeeded());
    REQUIRE(t.tiers.size() == 3);
    CHECK(t.tiers[0] == std::vector<GeneratorId>{0});
    CHECK(t.tiers[1] == std::vector<GeneratorId>{1});
    CHECK(t.tiers[2].empty());
    const HeightAssignment h = assign_heights(t);
    CHECK(h.at(0) == 3);
    CHECK(h.at(1) == 1);
}

TEST_CASE("trefoil flooding heights") {
    const KnotData k = load_corpus("trefoil.json");
    const InequalitySystem sys = area_inequalities(k.diagram);
    const Tiering t = flood(sys, k.diagram.crossings());
    REQUIRE(t.succeeded());
    REQUIRE(t.tiers.size() == 3);
    CHECK(t.tiers[0] == std::vector<GeneratorId>{0, 1});
    CHECK(t.tiers[1] == std::vector<GeneratorId>{2, 3, 4});
    CHECK(t.tiers[2].empty());
    const HeightAssignment h = assign_heights(t);
    CHECK(h.at(0) == 7);
    CHECK(h.at(1) == 7);
    CHECK(h.at(2) == 1);
    CHECK(validate_heights(h, sys).valid);
    // the file's own heights are also valid
    CHECK(validate_heights(*k.heights, sys).valid);
}

TEST_CASE("validate heights reports violations") {
    const InequalitySystem sys{{form({{0, 1}, {1, -1}})}};
    const HeightCheck check = validate_heights(HeightAssignment({{0, 1}, {1, 1}}), sys);
    CHECK_FALSE(check.valid);
    CHECK(check.violations == std::vector<std::size_t>{0});
}

TEST_CASE("flood rejects unknown variables") {
    CHECK_THROWS_AS(flood({{form({{3, 1}})}}, ids(2)), Error);
}

TEST_CASE("unconstrained crossings land in the final tier") {
    const Tiering t = flood({{form({{0, 1}, {1, -1}})}}, ids(3));
    REQUIRE(t.succeeded());
    // 0 and 2 are never negative; once 0 is tiered the system is empty.
    CHECK(t.tiers[0] == std::vector<GeneratorId>{0, 2});
    CHECK(t.tiers.back() == std::vector<GeneratorId>{1});
}

TEST_CASE("property: flooding output satisfies every inequality") {
    Rng rng(41);
    int successes = 0;
    for (int trial = 0; trial < 3000 && successes < 300; ++trial) {
        const int n = rng.uniform(1, 9);
        const InequalitySystem sys = random_system(rng, n);
        const Tiering t = flood(sys, ids(static_cast<std::size_t>(n)));
        CHECK(t.rounds <= static_cast<std::size_t>(n) + 1);
        if (!t.succeeded()) {
            // unassigned is the complement of the tiers
            std::vector<GeneratorId> seen = t.unassigned;
            for (const auto& tier : t.tiers) {
                seen.insert(seen.end(), tier.begin(), tier.end());
            }
            std::sort(seen.begin(), seen.end());
            CHECK(seen == ids(static_cast<std::size_t>(n)));
            continue;
        }
        ++successes;
        std::vector<GeneratorId> seen;
        for (const auto& tier : t.tiers) {
            seen.insert(seen.end(), tier.begin(), tier.end());
        }
        std::sort(seen.begin(), seen.end());
        CHECK(seen == ids(static_cast<std::size_t>(n)));
        CHECK(validate_heights(assign_heights(t), sys).valid);
    }
    CHECK(successes == 300);
}

TEST_CASE("property: flooding ignores inequality order and relabelling") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.uniform(1, 8);
        InequalitySystem sys = random_system(rng, n);
        const Tiering t = flood(sys, ids(static_cast<std::size_t>(n)));

        InequalitySystem shuffled = sys;
        std::shuffle(shuffled.inequalities.begin(), shuffled.inequalities.end(), rng.engine());
        const Tiering ts = flood(shuffled, ids(static_cast<std::size_t>(n)));
        CHECK(ts.tiers == t.tiers);
        CHECK(ts.unassigned == t.unassigned);

        std::vector<GeneratorId> perm = ids(static_cast<std::size_t>(n));
        std::shuffle(perm.begin(), perm.end(), rng.engine());
        InequalitySystem relabelled;
        for (const LinearForm& f : sys.inequalities) {
            std::vector<Corner> terms;
            for (const Corner& c : f.terms) {
                terms.push_back({perm[c.crossing], c.coefficient});
            }
            relabelled.inequalities.push_back(form(terms));
        }
        const Tiering tr = flood(relabelled, ids(static_cast<std::size_t>(n)));
        REQUIRE(tr.tiers.size() == t.tiers.size());
        CHECK(tr.status == t.status);
        for (std::size_t k = 0; k < t.tiers.size(); ++k) {
            std::vector<GeneratorId> mapped;
            for (GeneratorId q : t.tiers[k]) {
                mapped.push_back(perm[q]);
            }
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == tr.tiers[k]);
        }
    }
}

TEST_CASE("property: adding an inequality never rescues a failure") {
    Rng rng(43);
    int failures = 0;
    for (int trial = 0; trial < 2000 && failures < 200; ++trial) {
        const int n = rng.uniform(2, 8);
        InequalitySystem sys = random_system(rng, n);
        if (flood(sys, ids(static_cast<std::size_t>(n))).succeeded()) {
            continue;
        }
        ++failures;
        const InequalitySystem extra = random_system(rng, n);
        sys.inequalities.push_back(extra.inequalities.front());
        CHECK_FALSE(flood(sys, ids(static_cast<std::size_t>(n))).succeeded());
    }
    CHECK(failures > 0);
}

}
