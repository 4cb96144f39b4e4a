#include "topo/simp.hpp"

#include <algorithm>
#include <cmath>

namespace topo {

namespace {

constexpr double kLambdaLo = 0.0;
constexpr double kLambdaHi = 1e9;
constexpr int kMaxBisection = 60;
constexpr double kFilterDensityFloor = 1e-3;

// Shared element kernel of the parallel and serial filter variants; the
// per-element arithmetic (and thus the result bits) is identical in both.
inline double filteredValueAt(int ex, int ey, const Field2D& rho, const Field2D& dc,
                              double rmin, int reach) {
    const int nelx = rho.nelx();
    const int nely = rho.nely();
    double num = 0.0;
    double wsum = 0.0;
    const int x_lo = std::max(ex - reach, 0);
    const int x_hi = std::min(ex + reach, nelx - 1);
    const int y_lo = std::max(ey - reach, 0);
    const int y_hi = std::min(ey + reach, nely - 1);
    for (int jy = y_lo; jy <= y_hi; ++jy) {
        for (int jx = x_lo; jx <= x_hi; ++jx) {
            const double dx = static_cast<double>(ex - jx);
            const double dy = static_cast<double>(ey - jy);
            const double w = rmin - std::sqrt(dx * dx + dy * dy);
            if (w > 0.0) {
                num += w * rho(jx, jy) * dc(jx, jy);
                wsum += w;
            }
        }
    }
    return num / (std::max(rho(ex, ey), kFilterDensityFloor) * wsum);
}

void validateFilterArgs(const GridDomain& grid, const Field2D& rho,
                        const Field2D& dc, double rmin) {
    if (rho.nelx() != grid.nelx || rho.nely() != grid.nely || !rho.sameShape(dc))
        throw ParameterError("filterSensitivities: field shapes do not match the grid");
    if (!(rmin > 0.0) || !std::isfinite(rmin))
        throw ParameterError("filterSensitivities: rmin must be positive");
}

} // namespace

void SimpConfig::validate() const {
    if (!(volfrac > 0.0) || !(volfrac < 1.0))
        throw ParameterError("SimpConfig: volfrac must lie in (0, 1)");
    if (!(rmin > 0.0) || !std::isfinite(rmin))
        throw ParameterError("SimpConfig: rmin must be positive");
    if (!(move_limit > 0.0) || !(move_limit <= 1.0))
        throw ParameterError("SimpConfig: move_limit must lie in (0, 1]");
    if (!(change_tol > 0.0))
        throw ParameterError("SimpConfig: change_tol must be positive");
    if (!(oc_tol > 0.0))
        throw ParameterError("SimpConfig: oc_tol must be positive");
    if (max_iters < 1)
        throw ParameterError("SimpConfig: max_iters must be >= 1");
}

Field2D sensitivityAnalysis(const GridDomain& grid, const Field2D& rho,
                            const MaterialModel& mat, const SolutionFields& sol) {
    if (rho.nelx() != grid.nelx || rho.nely() != grid.nely)
        throw ParameterError("sensitivityAnalysis: density shape does not match grid");
    Field2D dc(grid.nelx, grid.nely);
    const double de = mat.E0 - mat.Emin;
    for (std::size_t e = 0; e < rho.size(); ++e) {
        // u' k0 u recovered from the stored compliance E(rho) u' k0 u. The
        // quadratic form is non-negative; roundoff can produce a tiny
        // negative in nearly unloaded elements, which would flip the
        // sensitivity sign, so it is floored at zero.
        const double uku =
            std::max(0.0, sol.compliance_per_element[e] / mat.modulus(rho[e]));
        dc[e] = -mat.penal * std::pow(rho[e], mat.penal - 1.0) * de * uku;
    }
    return dc;
}

Field2D filterSensitivities(const GridDomain& grid, const Field2D& rho,
                            const Field2D& dc, double rmin) {
    validateFilterArgs(grid, rho, dc, rmin);
    const int reach = static_cast<int>(std::ceil(rmin)) - 1;
    Field2D out(grid.nelx, grid.nely);
    const int n = static_cast<int>(rho.size());
#pragma omp parallel for schedule(static)
    for (int e = 0; e < n; ++e) {
        const int ex = e % grid.nelx;
        const int ey = e / grid.nelx;
        out[e] = filteredValueAt(ex, ey, rho, dc, rmin, reach);
    }
    return out;
}

Field2D filterSensitivitiesSerial(const GridDomain& grid, const Field2D& rho,
                                  const Field2D& dc, double rmin) {
    validateFilterArgs(grid, rho, dc, rmin);
    const int reach = static_cast<int>(std::ceil(rmin)) - 1;
    Field2D out(grid.nelx, grid.nely);
    const int n = static_cast<int>(rho.size());
    for (int e = 0; e < n; ++e) {
        const int ex = e % grid.nelx;
        const int ey = e / grid.nelx;
        out[e] = filteredValueAt(ex, ey, rho, dc, rmin, reach);
    }
    return out;
}

Field2D ocUpdate(const Field2D& rho, const Field2D& dc_filtered, const SimpConfig& cfg) {
    cfg.validate();
    if (!rho.sameShape(dc_filtered))
        throw ParameterError("ocUpdate: field shapes do not match");
    for (std::size_t e = 0; e < dc_filtered.size(); ++e)
        if (dc_filtered[e] > 0.0)
            throw ParameterError("ocUpdate: positive compliance sensitivity at element " +
                                 std::to_string(e));

    Field2D next(rho.nelx(), rho.nely());
    const auto volumeAt = [&](double lambda) {
        double sum = 0.0;
        for (std::size_t e = 0; e < rho.size(); ++e) {
            const double step = rho[e] * std::sqrt(-dc_filtered[e] / lambda);
            double v = std::min(step, rho[e] + cfg.move_limit);
            v = std::min(v, 1.0);
            v = std::max(v, rho[e] - cfg.move_limit);
            v = std::max(v, 0.0);
            next[e] = v;
            sum += v;
        }
        return sum / static_cast<double>(rho.size());
    };

    double lo = kLambdaLo;
    double hi = kLambdaHi;
    for (int it = 0; it < kMaxBisection; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double vol = volumeAt(mid);
        if (std::abs(vol - cfg.volfrac) <= cfg.oc_tol * cfg.volfrac)
            return next;
        // Volume decreases as lambda grows.
        if (vol > cfg.volfrac)
            lo = mid;
        else
            hi = mid;
    }
    throw NumericError("ocUpdate: volume bisection failed to reach volfrac " +
                       std::to_string(cfg.volfrac) + " within " +
                       std::to_string(kMaxBisection) + " steps (target volume "
                       "unreachable under the move limit)");
}

OptimizationResult runSimp(const GridDomain& grid, const MaterialModel& mat,
                           const LoadCase& lc, const SimpConfig& cfg) {
    cfg.validate();
    FeaSolver solver(grid, mat, lc);

    Field2D rho(grid.nelx, grid.nely, cfg.volfrac);
    OptimizationResult res;
    res.compliance_history.reserve(cfg.max_iters);

    for (int it = 1; it <= cfg.max_iters; ++it) {
        const SolutionFields sol = solver.solve(rho);
        res.compliance_history.push_back(sol.total_compliance);

        const Field2D dc = sensitivityAnalysis(grid, rho, mat, sol);
        const Field2D dcf = filterSensitivities(grid, rho, dc, cfg.rmin);
        Field2D next = ocUpdate(rho, dcf, cfg);

        const double change = next.maxAbsDiff(rho);
        rho = std::move(next);
        res.iterations = it;
        if (change < cfg.change_tol) {
            res.converged = true;
            break;
        }
    }

    res.density = std::move(rho);
    return res;
}

} // namespace topo
