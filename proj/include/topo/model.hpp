#pragma once

#include <array>
#include <string>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

/// Regular rectangular mesh of unit-square bilinear elements.
///
/// Nodes are numbered column-major in the classic 88-line layout:
/// node(nx, ny) = nx*(nely+1) + ny, with ny counted downward from the top
/// row. Each node carries two DOFs, 2n (x) and 2n+1 (y); +y points up,
/// i.e. toward smaller ny.
struct GridDomain {
    int nelx = 0;
    int nely = 0;

    GridDomain() = default;

    GridDomain(int nelx_in, int nely_in) : nelx(nelx_in), nely(nely_in) {
        if (nelx < 1 || nely < 1)
            throw ParameterError("GridDomain: nelx and nely must be >= 1");
    }

    int nodeCount() const { return (nelx + 1) * (nely + 1); }
    int dofCount() const { return 2 * nodeCount(); }
    int elementCount() const { return nelx * nely; }

    int nodeId(int nx, int ny) const { return nx * (nely + 1) + ny; }
    int nodeX(int node) const { return node / (nely + 1); }
    int nodeY(int node) const { return node % (nely + 1); }

    /// Corner DOFs of element (ex, ey) in counterclockwise node order
    /// lower-left, lower-right, upper-right, upper-left (x DOF then y DOF).
    std::array<int, 8> elementDofs(int ex, int ey) const {
        const int n1 = nodeId(ex, ey + 1);
        const int n2 = nodeId(ex + 1, ey + 1);
        const int n3 = nodeId(ex + 1, ey);
        const int n4 = nodeId(ex, ey);
        return {2 * n1, 2 * n1 + 1, 2 * n2, 2 * n2 + 1,
                2 * n3, 2 * n3 + 1, 2 * n4, 2 * n4 + 1};
    }
};

/// Modified SIMP material interpolation E(rho) = Emin + rho^p (E0 - Emin).
struct MaterialModel {
    double E0 = 1.0;
    double Emin = 1e-9;
    double nu = 0.3;
    double penal = 3.0;

    double modulus(double rho) const;
    void validate() const;
};

struct PointForce {
    int node = 0;
    double fx = 0.0;
    double fy = 0.0;

    bool operator==(const PointForce& o) const {
        return node == o.node && fx == o.fx && fy == o.fy;
    }
};

/// Point loads plus homogeneous displacement constraints.
/// Forces applied to fixed DOFs are retained; the solver zeroes them when
/// the constrained rows are eliminated.
struct LoadCase {
    std::vector<PointForce> forces;
    std::vector<int> fixed_dofs;
    std::string bc_template_id;

    /// Throws ParameterError on out-of-range nodes/DOFs, non-finite force
    /// components, or fewer than 3 distinct fixed DOFs.
    void validate(const GridDomain& grid) const;
};

} // namespace topo
