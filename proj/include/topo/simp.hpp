#pragma once

#include <vector>

#include "topo/fea.hpp"
#include "topo/field.hpp"
#include "topo/model.hpp"

namespace topo {

struct SimpConfig {
    double volfrac = 0.5;
    double rmin = 1.5;
    double move_limit = 0.2;
    double change_tol = 0.01;   // max |delta rho| convergence threshold
    double oc_tol = 1e-4;       // relative volume tolerance of the OC bisection
    int max_iters = 200;

    void validate() const;
};

struct OptimizationResult {
    Field2D density;
    std::vector<double> compliance_history;  // one entry per iteration
    int iterations = 0;
    bool converged = false;
};

/// Compliance sensitivity dc/drho_e = -p rho^(p-1) (E0 - Emin) u_e' k0 u_e.
/// Always non-positive; exactly zero where rho_e is zero.
Field2D sensitivityAnalysis(const GridDomain& grid, const Field2D& rho,
                            const MaterialModel& mat, const SolutionFields& sol);

/// Cone-weighted density-scaled sensitivity filter,
///   dcf_e = sum_i w_ei rho_i dc_i / (max(rho_e, 1e-3) sum_i w_ei),
/// with w_ei = max(0, rmin - dist(e, i)) over the square window of
/// half-width ceil(rmin)-1 (which contains every element with positive
/// weight). OpenMP-parallel over elements.
Field2D filterSensitivities(const GridDomain& grid, const Field2D& rho,
                            const Field2D& dc, double rmin);

/// Serial reference implementation of filterSensitivities; identical
/// arithmetic per element, kept for testing and benchmarking.
Field2D filterSensitivitiesSerial(const GridDomain& grid, const Field2D& rho,
                                  const Field2D& dc, double rmin);

/// Optimality-criteria update: bisects the volume multiplier on [0, 1e9]
/// until |mean(rho_new) - volfrac| <= oc_tol * volfrac, with the update
/// rho_new = clamp(rho sqrt(-dc/lambda)) clamped to [rho +- move] and [0,1].
/// Throws NumericError if 60 bisection steps cannot satisfy the volume
/// constraint (the failure is reported, never clamped away).
Field2D ocUpdate(const Field2D& rho, const Field2D& dc_filtered,
                 const SimpConfig& cfg);

/// Full SIMP loop: solve, sensitivities, filter, OC update, starting from
/// the uniform volfrac field, until max |delta rho| < change_tol or
/// max_iters. Non-convergence is reported through the converged flag.
OptimizationResult runSimp(const GridDomain& grid, const MaterialModel& mat,
                           const LoadCase& lc, const SimpConfig& cfg);

} // namespace topo
