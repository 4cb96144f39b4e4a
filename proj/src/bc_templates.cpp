#include "topo/bc_templates.hpp"

#include <algorithm>

namespace topo {

namespace {

using Where = BcTemplate::Where;

std::vector<int> regionNodes(Where where, const GridDomain& g) {
    std::vector<int> nodes;
    switch (where) {
    case Where::LeftEdge:
        for (int ny = 0; ny <= g.nely; ++ny) nodes.push_back(g.nodeId(0, ny));
        break;
    case Where::RightEdge:
        for (int ny = 0; ny <= g.nely; ++ny) nodes.push_back(g.nodeId(g.nelx, ny));
        break;
    case Where::TopEdge:
        for (int nx = 0; nx <= g.nelx; ++nx) nodes.push_back(g.nodeId(nx, 0));
        break;
    case Where::BottomEdge:
        for (int nx = 0; nx <= g.nelx; ++nx) nodes.push_back(g.nodeId(nx, g.nely));
        break;
    case Where::TopLeft:
        nodes.push_back(g.nodeId(0, 0));
        break;
    case Where::TopRight:
        nodes.push_back(g.nodeId(g.nelx, 0));
        break;
    case Where::BottomLeft:
        nodes.push_back(g.nodeId(0, g.nely));
        break;
    case Where::BottomRight:
        nodes.push_back(g.nodeId(g.nelx, g.nely));
        break;
    }
    return nodes;
}

std::vector<BcTemplate> makeTemplates() {
    std::vector<BcTemplate> t;

    t.push_back({"a",
                 "cantilever: left edge clamped, loads on the right half",
                 {{Where::LeftEdge, true, true}},
                 {0.5, 1.0, 0.0, 1.0}});

    t.push_back({"b",
                 "simply supported: bottom-left pinned, bottom-right y-roller",
                 {{Where::BottomLeft, true, true}, {Where::BottomRight, false, true}},
                 {0.0, 1.0, 0.0, 1.0}});

    t.push_back({"c",
                 "bridge: left and right edges clamped, loads in the middle band",
                 {{Where::LeftEdge, true, true}, {Where::RightEdge, true, true}},
                 {0.25, 0.75, 0.0, 1.0}});

    t.push_back({"d",
                 "wall: bottom edge clamped, loads in the upper half",
                 {{Where::BottomEdge, true, true}},
                 {0.0, 1.0, 0.0, 0.5}});

    t.push_back({"e",
                 "propped cantilever: left edge clamped plus bottom-right "
                 "y-roller, loads on the right half",
                 {{Where::LeftEdge, true, true}, {Where::BottomRight, false, true}},
                 {0.5, 1.0, 0.0, 1.0}});

    return t;
}

BcTemplate makeMbb() {
    // Half of a symmetric three-point-bending beam: symmetry plane on the
    // left (x-rollers), support under the far bottom corner.
    return {"mbb",
            "half beam: left-edge x-rollers plus bottom-right y-roller",
            {{Where::LeftEdge, true, false}, {Where::BottomRight, false, true}},
            {0.0, 1.0, 0.0, 1.0}};
}

} // namespace

std::vector<int> BcTemplate::fixedDofs(const GridDomain& grid) const {
    std::vector<int> dofs;
    for (const Rule& r : rules) {
        for (int node : regionNodes(r.where, grid)) {
            if (r.fix_x) dofs.push_back(2 * node);
            if (r.fix_y) dofs.push_back(2 * node + 1);
        }
    }
    std::sort(dofs.begin(), dofs.end());
    dofs.erase(std::unique(dofs.begin(), dofs.end()), dofs.end());
    return dofs;
}

std::vector<int> BcTemplate::admissibleNodes(const GridDomain& grid) const {
    std::vector<int> nodes;
    for (int nx = 0; nx <= grid.nelx; ++nx) {
        const double fx = static_cast<double>(nx) / grid.nelx;
        if (fx < force_region.x_lo || fx > force_region.x_hi) continue;
        for (int ny = 0; ny <= grid.nely; ++ny) {
            const double fy = static_cast<double>(ny) / grid.nely;
            if (fy < force_region.y_lo || fy > force_region.y_hi) continue;
            nodes.push_back(grid.nodeId(nx, ny));
        }
    }
    std::sort(nodes.begin(), nodes.end());
    if (nodes.empty())
        throw ParameterError("template '" + id + "': force region contains no node "
                             "of the " + std::to_string(grid.nelx) + "x" +
                             std::to_string(grid.nely) + " grid");
    return nodes;
}

const std::vector<BcTemplate>& builtinTemplates() {
    static const std::vector<BcTemplate> templates = makeTemplates();
    return templates;
}

const BcTemplate& templateById(std::string_view id) {
    for (const BcTemplate& t : builtinTemplates())
        if (t.id == id) return t;
    static const BcTemplate mbb = makeMbb();
    if (id == mbb.id) return mbb;
    throw ParameterError("unknown boundary-condition template '" + std::string(id) +
                         "' (available: a, b, c, d, e, mbb)");
}

bool isGenerationTemplate(std::string_view id) {
    for (const BcTemplate& t : builtinTemplates())
        if (t.id == id) return true;
    return false;
}

} // namespace topo
