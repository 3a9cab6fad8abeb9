#include "legch/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace legch {

LagrangianDiagramData::LagrangianDiagramData(std::vector<GeneratorId> crossings, std::vector<AreaPatch> patches,
                                             bool ng_resolved)
    : crossings_(std::move(crossings)), patches_(std::move(patches)), ng_resolved_(ng_resolved) {
    std::set<GeneratorId> known(crossings_.begin(), crossings_.end());
    if (known.size() != crossings_.size()) {
        throw Error(ErrorCode::invalid_patch, "crossing list has duplicates");
    }
    for (std::size_t p = 0; p < patches_.size(); ++p) {
        std::set<GeneratorId> seen;
        for (const Corner& c : patches_[p].corners) {
            if (!known.count(c.crossing)) {
                throw Error(ErrorCode::invalid_patch, "patch " + std::to_string(p) + " has a corner at unknown crossing " +
                                                          std::to_string(c.crossing));
            }
            if (!seen.insert(c.crossing).second) {
                throw Error(ErrorCode::invalid_patch, "patch " + std::to_string(p) + " lists crossing " +
                                                          std::to_string(c.crossing) + " twice");
            }
            if (c.coefficient == 0 || c.coefficient < -2 || c.coefficient > 2) {
                throw Error(ErrorCode::invalid_patch, "patch " + std::to_string(p) + " has coefficient " +
                                                          std::to_string(c.coefficient) + " outside {-2,-1,1,2}");
            }
        }
    }
}

int LinearForm::coefficient(GeneratorId id) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), id,
                               [](const Corner& c, GeneratorId key) { return c.crossing < key; });
    return (it != terms.end() && it->crossing == id) ? it->coefficient : 0;
}

LinearForm make_linear_form(std::vector<Corner> terms) {
    std::map<GeneratorId, int> summed;
    for (const Corner& c : terms) {
        summed[c.crossing] += c.coefficient;
    }
    LinearForm form;
    for (const auto& [id, coefficient] : summed) {
        if (coefficient != 0) {
            form.terms.push_back({id, coefficient});
        }
    }
    return form;
}

InequalitySystem area_inequalities(const LagrangianDiagramData& diagram) {
    InequalitySystem system;
    system.inequalities.reserve(diagram.patches().size());
    for (const AreaPatch& patch : diagram.patches()) {
        system.inequalities.push_back(make_linear_form(patch.corners));
    }
    return system;
}

Tiering flood(const InequalitySystem& system, const std::vector<GeneratorId>& crossings) {
    std::set<GeneratorId> untiered(crossings.begin(), crossings.end());
    for (const LinearForm& f : system.inequalities) {
        for (const Corner& t : f.terms) {
            if (!untiered.count(t.crossing)) {
                throw Error(ErrorCode::precondition,
                            "inequality mentions crossing " + std::to_string(t.crossing) + " outside the crossing set");
            }
        }
    }

    std::vector<const LinearForm*> remaining;
    for (const LinearForm& f : system.inequalities) {
        remaining.push_back(&f);
    }

    Tiering result;
    while (true) {
        ++result.rounds;
        std::vector<GeneratorId> tier;
        for (GeneratorId q : untiered) {
            const bool never_negative = std::all_of(remaining.begin(), remaining.end(),
                                                    [q](const LinearForm* f) { return f->coefficient(q) >= 0; });
            if (never_negative) {
                tier.push_back(q);
            }
        }
        if (tier.empty() && !remaining.empty()) {
            result.status = Tiering::Status::failure;
            result.unassigned.assign(untiered.begin(), untiered.end());
            return result;
        }
        for (GeneratorId q : tier) {
            untiered.erase(q);
        }
        std::erase_if(remaining, [&tier](const LinearForm* f) {
            return std::any_of(tier.begin(), tier.end(), [f](GeneratorId q) { return f->coefficient(q) > 0; });
        });
        result.tiers.push_back(std::move(tier));
        if (remaining.empty()) {
            result.tiers.emplace_back(untiered.begin(), untiered.end());
            result.status = Tiering::Status::success;
            return result;
        }
    }
}

HeightAssignment assign_heights(const Tiering& tiering) {
    if (!tiering.succeeded()) {
        throw Error(ErrorCode::precondition, "cannot assign heights from a failed flooding");
    }
    const std::size_t m = tiering.tiers.size();
    std::vector<Rational> level(m, 1);
    // tail accumulates sum_{i > k} 2 h_i |T_i|
    Rational tail = 0;
    for (std::size_t k = m; k-- > 0;) {
        level[k] = 1 + tail;
        tail += 2 * level[k] * static_cast<long long>(tiering.tiers[k].size());
    }
    std::map<GeneratorId, Rational> heights;
    for (std::size_t k = 0; k < m; ++k) {
        for (GeneratorId q : tiering.tiers[k]) {
            heights[q] = level[k];
        }
    }
    return HeightAssignment(std::move(heights));
}

HeightCheck validate_heights(const HeightAssignment& heights, const InequalitySystem& system) {
    HeightCheck check;
    for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
        Rational total = 0;
        for (const Corner& t : system.inequalities[i].terms) {
            total += t.coefficient * heights.at(t.crossing);
        }
        if (!(total > 0)) {
            check.violations.push_back(i);
        }
    }
    check.valid = check.violations.empty();
    return check;
}

} // namespace legch
