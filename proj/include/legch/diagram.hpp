#pragma once

// Combinatorial Lagrangian-diagram data: area patches, the strict linear
// inequalities they impose on crossing heights, and the flooding algorithm
// that solves those inequalities tier by tier.

#include "legch/algebra.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace legch {

struct Corner {
    GeneratorId crossing = 0;
    int coefficient = 0;  // signed multiplicity, one of -2, -1, 1, 2

    bool operator==(const Corner&) const = default;
};

struct AreaPatch {
    std::vector<Corner> corners;

    bool operator==(const AreaPatch&) const = default;
};

/// Crossings are DGA generator ids.  `ng_resolved` is carried as metadata.
class LagrangianDiagramData {
public:
    LagrangianDiagramData() = default;
    LagrangianDiagramData(std::vector<GeneratorId> crossings, std::vector<AreaPatch> patches, bool ng_resolved);

    const std::vector<GeneratorId>& crossings() const { return crossings_; }
    const std::vector<AreaPatch>& patches() const { return patches_; }
    bool ng_resolved() const { return ng_resolved_; }

    bool operator==(const LagrangianDiagramData&) const = default;

private:
    std::vector<GeneratorId> crossings_;
    std::vector<AreaPatch> patches_;
    bool ng_resolved_ = false;
};

/// sum_j coefficient_j * h(q_j) > 0, stored sparsely and sorted by id.
struct LinearForm {
    std::vector<Corner> terms;

    int coefficient(GeneratorId id) const;
    bool operator==(const LinearForm&) const = default;
};

struct InequalitySystem {
    std::vector<LinearForm> inequalities;
};

struct Tiering {
    enum class Status { success, failure };

    std::vector<std::vector<GeneratorId>> tiers;  // T_1 ... T_M, each sorted
    Status status = Status::success;
    std::vector<GeneratorId> unassigned;          // nonempty iff failure
    std::size_t rounds = 0;                       // tier-extraction rounds performed

    bool succeeded() const { return status == Status::success; }
};

InequalitySystem area_inequalities(const LagrangianDiagramData& diagram);

// Builds a form from arbitrary terms: repeated ids are summed, zeros dropped.
LinearForm make_linear_form(std::vector<Corner> terms);

Tiering flood(const InequalitySystem& system, const std::vector<GeneratorId>& crossings);

// h_M = 1 and h_k = 1 + sum_{i > k} 2 h_i |T_i|; every crossing of T_k gets h_k.
HeightAssignment assign_heights(const Tiering& tiering);

struct HeightCheck {
    bool valid = true;
    std::vector<std::size_t> violations;  // indices of inequalities that fail
};

HeightCheck validate_heights(const HeightAssignment& heights, const InequalitySystem& system);

} // namespace legch
