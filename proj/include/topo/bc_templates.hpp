#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "topo/model.hpp"

namespace topo {

/// Axis-aligned node region given in fractional grid coordinates.
/// x runs 0 (left) to 1 (right); y runs 0 (top row) to 1 (bottom row),
/// matching the stored image orientation. Bounds are inclusive.
struct ForceRegion {
    double x_lo = 0.0;
    double x_hi = 1.0;
    double y_lo = 0.0;
    double y_hi = 1.0;
};

/// Displacement boundary-condition template plus the node region admissible
/// for load placement. Templates are data: a set of edge/corner rules, each
/// fixing the x and/or y DOF of every node in its region.
struct BcTemplate {
    enum class Where {
        LeftEdge,
        RightEdge,
        TopEdge,
        BottomEdge,
        TopLeft,
        TopRight,
        BottomLeft,
        BottomRight,
    };

    struct Rule {
        Where where;
        bool fix_x = false;
        bool fix_y = false;
    };

    std::string id;
    std::string description;
    std::vector<Rule> rules;
    ForceRegion force_region;

    /// Fixed DOF indices, sorted and deduplicated.
    std::vector<int> fixedDofs(const GridDomain& grid) const;

    /// Node ids inside the force region, ascending. Throws ParameterError
    /// if the region contains no node of the given grid.
    std::vector<int> admissibleNodes(const GridDomain& grid) const;
};

/// The built-in generation templates:
///   a: left edge clamped; loads on the right half
///   b: bottom-left corner pinned, bottom-right corner y-roller
///   c: left and right edges clamped; loads in the middle band
///   d: bottom edge clamped; loads in the upper half
///   e: left edge clamped plus bottom-right y-roller; loads on the right half
const std::vector<BcTemplate>& builtinTemplates();

/// Resolves a template by id. Besides a-e this accepts the "mbb" preset
/// (half-beam: left-edge x-rollers plus bottom-right y-roller) used for
/// standalone solves. Throws ParameterError for unknown ids.
const BcTemplate& templateById(std::string_view id);

/// True if the id names one of the generation templates a-e.
bool isGenerationTemplate(std::string_view id);

} // namespace topo
