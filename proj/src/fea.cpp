#include "topo/fea.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace topo {

namespace {

constexpr double kResidualTarget = 1e-10;  // refinement trigger
constexpr double kResidualLimit = 1e-9;    // hard acceptance bound

// Local corner coordinates, counterclockwise from the lower-left node.
constexpr double kXi[4] = {-1.0, 1.0, 1.0, -1.0};
constexpr double kEta[4] = {-1.0, -1.0, 1.0, 1.0};

} // namespace

ElementMatrix elementStiffness(double nu) {
    if (!(nu > 0.0) || !(nu < 0.5))
        throw ParameterError("elementStiffness: nu must lie in (0, 0.5)");

    Eigen::Matrix4d A11, A12, B11, B12;
    A11 << 12, 3, -6, -3,
            3, 12, 3, 0,
           -6, 3, 12, -3,
           -3, 0, -3, 12;
    A12 << -6, -3, 0, 3,
           -3, -6, -3, -6,
            0, -3, -6, 3,
            3, -6, 3, -6;
    B11 << -4, 3, -2, 9,
            3, -4, -9, 4,
           -2, -9, -4, -3,
            9, 4, -3, -4;
    B12 << 2, -3, 4, -9,
           -3, 2, 9, -2,
            4, 9, 2, 3,
           -9, -2, 3, 2;

    ElementMatrix a, b;
    a << A11, A12, A12.transpose(), A11;
    b << B11, B12, B12.transpose(), B11;
    return (a + nu * b) / (24.0 * (1.0 - nu * nu));
}

Eigen::Matrix3d constitutiveMatrix(double nu) {
    Eigen::Matrix3d d;
    d << 1.0, nu, 0.0,
         nu, 1.0, 0.0,
         0.0, 0.0, (1.0 - nu) / 2.0;
    return d / (1.0 - nu * nu);
}

Eigen::Matrix<double, 3, 8> strainDisplacementCentroid() {
    // Unit square: dN/dx = xi_i/2, dN/dy = eta_i/2 at xi = eta = 0.
    Eigen::Matrix<double, 3, 8> b = Eigen::Matrix<double, 3, 8>::Zero();
    for (int i = 0; i < 4; ++i) {
        const double dndx = kXi[i] / 2.0;
        const double dndy = kEta[i] / 2.0;
        b(0, 2 * i) = dndx;
        b(1, 2 * i + 1) = dndy;
        b(2, 2 * i) = dndy;
        b(2, 2 * i + 1) = dndx;
    }
    return b;
}

double vonMises(double sx, double sy, double sxy) {
    return std::sqrt(sx * sx - sx * sy + sy * sy + 3.0 * sxy * sxy);
}

double strainEnergyDensity(double sx, double sy, double sxy,
                           double ex, double ey, double exy) {
    return 0.5 * (sx * ex + sy * ey + 2.0 * sxy * exy);
}

struct FeaSolver::Impl {
    GridDomain grid;
    MaterialModel mat;
    LoadCase lc;

    ElementMatrix ke;
    Eigen::Matrix<double, 3, 8> bmat;
    Eigen::Matrix3d dmat;

    std::vector<int> dof_to_free;            // -1 for fixed DOFs
    std::vector<std::array<int, 8>> edof;    // per element, row-major element order
    std::vector<std::int32_t> slots;         // 64 entries per element into K values, -1 dropped
    Eigen::SparseMatrix<double> k_reduced;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    Eigen::VectorXd f_free;
    double f_norm = 0.0;
    int n_free = 0;
};

FeaSolver::~FeaSolver() = default;
FeaSolver::FeaSolver(FeaSolver&&) noexcept = default;
FeaSolver& FeaSolver::operator=(FeaSolver&&) noexcept = default;

const GridDomain& FeaSolver::grid() const { return impl_->grid; }

FeaSolver::FeaSolver(const GridDomain& grid, const MaterialModel& mat, const LoadCase& lc)
    : impl_(std::make_unique<Impl>()) {
    mat.validate();
    lc.validate(grid);

    Impl& im = *impl_;
    im.grid = grid;
    im.mat = mat;
    im.lc = lc;
    im.ke = elementStiffness(mat.nu);
    im.bmat = strainDisplacementCentroid();
    im.dmat = constitutiveMatrix(mat.nu);

    im.dof_to_free.assign(grid.dofCount(), 0);
    for (int d : lc.fixed_dofs) im.dof_to_free[d] = -1;
    im.n_free = 0;
    for (int d = 0; d < grid.dofCount(); ++d)
        if (im.dof_to_free[d] >= 0) im.dof_to_free[d] = im.n_free++;

    im.edof.reserve(grid.elementCount());
    for (int ey = 0; ey < grid.nely; ++ey)
        for (int ex = 0; ex < grid.nelx; ++ex)
            im.edof.push_back(grid.elementDofs(ex, ey));

    // Pattern assembly: one triplet pass fixes the sparsity, then every
    // nonzero gets a direct slot in the compressed value array so per-solve
    // assembly is a plain scatter-add.
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(im.edof.size() * 64);
    for (const auto& ed : im.edof)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const int r = im.dof_to_free[ed[i]];
                const int c = im.dof_to_free[ed[j]];
                if (r >= 0 && c >= 0) trips.emplace_back(r, c, 0.0);
            }
    im.k_reduced.resize(im.n_free, im.n_free);
    im.k_reduced.setFromTriplets(trips.begin(), trips.end());
    im.k_reduced.makeCompressed();

    const auto* outer = im.k_reduced.outerIndexPtr();
    const auto* inner = im.k_reduced.innerIndexPtr();
    im.slots.assign(im.edof.size() * 64, -1);
    for (std::size_t e = 0; e < im.edof.size(); ++e) {
        const auto& ed = im.edof[e];
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const int r = im.dof_to_free[ed[i]];
                const int c = im.dof_to_free[ed[j]];
                if (r < 0 || c < 0) continue;
                const auto* begin = inner + outer[c];
                const auto* end = inner + outer[c + 1];
                const auto* it = std::lower_bound(begin, end, r);
                im.slots[e * 64 + i * 8 + j] =
                    static_cast<std::int32_t>(outer[c] + (it - begin));
            }
    }

    im.ldlt.analyzePattern(im.k_reduced);

    im.f_free = Eigen::VectorXd::Zero(im.n_free);
    for (const PointForce& pf : lc.forces) {
        const int dx = im.dof_to_free[2 * pf.node];
        const int dy = im.dof_to_free[2 * pf.node + 1];
        if (dx >= 0) im.f_free[dx] += pf.fx;
        if (dy >= 0) im.f_free[dy] += pf.fy;
    }
    im.f_norm = im.f_free.norm();
}

SolutionFields FeaSolver::solve(const Field2D& rho) {
    Impl& im = *impl_;
    const GridDomain& grid = im.grid;
    if (rho.nelx() != grid.nelx || rho.nely() != grid.nely)
        throw ParameterError("solve: density field is " + std::to_string(rho.nelx()) +
                             "x" + std::to_string(rho.nely()) + ", grid is " +
                             std::to_string(grid.nelx) + "x" + std::to_string(grid.nely));
    validateDensity(rho);

    double* values = im.k_reduced.valuePtr();
    std::fill(values, values + im.k_reduced.nonZeros(), 0.0);
    const double* keflat = im.ke.data();  // column-major, ke is symmetric
    for (std::size_t e = 0; e < im.edof.size(); ++e) {
        const double ee = im.mat.modulus(rho[e]);
        const std::int32_t* slot = im.slots.data() + e * 64;
        for (int k = 0; k < 64; ++k)
            if (slot[k] >= 0) values[slot[k]] += ee * keflat[k];
    }

    Eigen::VectorXd u_free;
    if (im.f_norm == 0.0) {
        u_free = Eigen::VectorXd::Zero(im.n_free);
    } else {
        im.ldlt.factorize(im.k_reduced);
        if (im.ldlt.info() != Eigen::Success)
            throw SolveError("solve: sparse factorization failed "
                             "(insufficiently constrained or degenerate system)");
        u_free = im.ldlt.solve(im.f_free);
        if (!u_free.allFinite())
            throw SolveError("solve: factorization produced non-finite displacements");

        double rel = (im.f_free - im.k_reduced * u_free).norm() / im.f_norm;
        for (int pass = 0; pass < 2 && rel > kResidualTarget; ++pass) {
            // One step of iterative refinement reuses the factorization.
            const Eigen::VectorXd r = im.f_free - im.k_reduced * u_free;
            u_free += im.ldlt.solve(r);
            rel = (im.f_free - im.k_reduced * u_free).norm() / im.f_norm;
        }
        if (!(rel <= kResidualLimit) || !u_free.allFinite())
            throw SolveError("solve: relative residual " + std::to_string(rel) +
                             " exceeds 1e-9 (system close to singular)");
    }

    SolutionFields out;
    out.displacements = Eigen::VectorXd::Zero(grid.dofCount());
    for (int d = 0; d < grid.dofCount(); ++d)
        if (im.dof_to_free[d] >= 0)
            out.displacements[d] = u_free[im.dof_to_free[d]];

    out.compliance_per_element = Field2D(grid.nelx, grid.nely);
    out.von_mises = Field2D(grid.nelx, grid.nely);
    out.strain_energy_density = Field2D(grid.nelx, grid.nely);

    double total = 0.0;
    Eigen::Matrix<double, 8, 1> ue;
    for (std::size_t e = 0; e < im.edof.size(); ++e) {
        const auto& ed = im.edof[e];
        for (int i = 0; i < 8; ++i) ue[i] = out.displacements[ed[i]];
        const double ee = im.mat.modulus(rho[e]);

        const double ce = ee * ue.dot(im.ke * ue);
        out.compliance_per_element[e] = ce;
        total += ce;

        const Eigen::Vector3d strain = im.bmat * ue;        // eps_x, eps_y, gamma_xy
        const Eigen::Vector3d stress = ee * (im.dmat * strain);
        out.von_mises[e] = vonMises(stress[0], stress[1], stress[2]);
        out.strain_energy_density[e] = strainEnergyDensity(
            stress[0], stress[1], stress[2],
            strain[0], strain[1], strain[2] / 2.0);
    }
    out.total_compliance = total;
    return out;
}

SolutionFields solveSystem(const GridDomain& grid, const Field2D& rho,
                           const MaterialModel& mat, const LoadCase& lc) {
    FeaSolver solver(grid, mat, lc);
    return solver.solve(rho);
}

} // namespace topo
