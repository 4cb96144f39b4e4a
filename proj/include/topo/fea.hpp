#pragma once

#include <memory>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "topo/field.hpp"
#include "topo/model.hpp"

namespace topo {

using ElementMatrix = Eigen::Matrix<double, 8, 8>;

/// Plane-stress stiffness of a unit-square bilinear quad with unit Young's
/// modulus and unit thickness. Symmetric positive semidefinite with exactly
/// three rigid-body zero modes. Requires 0 < nu < 0.5.
ElementMatrix elementStiffness(double nu);

/// Plane-stress constitutive matrix for unit Young's modulus.
Eigen::Matrix3d constitutiveMatrix(double nu);

/// Strain-displacement matrix at the element centroid (unit square,
/// counterclockwise node order lower-left, lower-right, upper-right,
/// upper-left). Rows: eps_x, eps_y, gamma_xy.
Eigen::Matrix<double, 3, 8> strainDisplacementCentroid();

double vonMises(double sx, double sy, double sxy);

/// Elastic energy density 0.5 * sigma : eps; exy is the tensor shear strain
/// (half the engineering shear gamma_xy).
double strainEnergyDensity(double sx, double sy, double sxy,
                           double ex, double ey, double exy);

struct SolutionFields {
    Eigen::VectorXd displacements;       // full DOF vector, fixed DOFs zero
    Field2D compliance_per_element;      // E(rho_e) u_e' k0 u_e
    Field2D von_mises;                   // centroid von Mises stress
    Field2D strain_energy_density;       // centroid energy density
    double total_compliance = 0.0;
};

/// Assembles and solves the constrained system for varying density fields on
/// a fixed grid and load case. The sparsity pattern, the symbolic
/// factorisation, the reduced right-hand side and the element DOF table are
/// built once and reused across solves, so repeated calls (one per optimizer
/// iteration) only pay for the numeric factorisation.
class FeaSolver {
public:
    FeaSolver(const GridDomain& grid, const MaterialModel& mat, const LoadCase& lc);
    ~FeaSolver();
    FeaSolver(FeaSolver&&) noexcept;
    FeaSolver& operator=(FeaSolver&&) noexcept;

    /// Solves K(rho) u = f and derives the per-element fields.
    /// Throws ParameterError on shape/range violations and SolveError when
    /// the relative residual cannot be brought below 1e-9.
    SolutionFields solve(const Field2D& rho);

    const GridDomain& grid() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around FeaSolver.
SolutionFields solveSystem(const GridDomain& grid, const Field2D& rho,
                           const MaterialModel& mat, const LoadCase& lc);

} // namespace topo
