#include "topo/model.hpp"

#include <cmath>
#include <set>

namespace topo {

double MaterialModel::modulus(double rho) const {
    return Emin + std::pow(rho, penal) * (E0 - Emin);
}

void MaterialModel::validate() const {
    if (!(E0 > 0.0) || !std::isfinite(E0))
        throw ParameterError("MaterialModel: E0 must be positive");
    if (!(Emin > 0.0) || !(Emin < E0))
        throw ParameterError("MaterialModel: Emin must satisfy 0 < Emin < E0");
    if (!(nu > 0.0) || !(nu < 0.5))
        throw ParameterError("MaterialModel: nu must lie in (0, 0.5)");
    if (!(penal >= 1.0) || !std::isfinite(penal))
        throw ParameterError("MaterialModel: penal must be >= 1");
}

void LoadCase::validate(const GridDomain& grid) const {
    const int ndof = grid.dofCount();
    const int nnode = grid.nodeCount();

    for (const PointForce& f : forces) {
        if (f.node < 0 || f.node >= nnode)
            throw ParameterError("LoadCase: force node " + std::to_string(f.node) +
                                 " outside grid with " + std::to_string(nnode) + " nodes");
        if (!std::isfinite(f.fx) || !std::isfinite(f.fy))
            throw ParameterError("LoadCase: non-finite force at node " +
                                 std::to_string(f.node));
    }

    std::set<int> distinct;
    for (int d : fixed_dofs) {
        if (d < 0 || d >= ndof)
            throw ParameterError("LoadCase: fixed DOF " + std::to_string(d) +
                                 " outside range [0, " + std::to_string(ndof) + ")");
        distinct.insert(d);
    }
    if (distinct.size() < 3)
        throw ParameterError("LoadCase: needs at least 3 distinct fixed DOFs to "
                             "suppress rigid-body motion, got " +
                             std::to_string(distinct.size()));
}

} // namespace topo
