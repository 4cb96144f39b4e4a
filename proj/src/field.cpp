#include "topo/field.hpp"

#include <cmath>

namespace topo {

Field2D mirrorX(const Field2D& f) {
    Field2D out(f.nelx(), f.nely());
    for (int ey = 0; ey < f.nely(); ++ey)
        for (int ex = 0; ex < f.nelx(); ++ex)
            out(f.nelx() - 1 - ex, ey) = f(ex, ey);
    return out;
}

Field2D mirrorY(const Field2D& f) {
    Field2D out(f.nelx(), f.nely());
    for (int ey = 0; ey < f.nely(); ++ey)
        for (int ex = 0; ex < f.nelx(); ++ex)
            out(ex, f.nely() - 1 - ey) = f(ex, ey);
    return out;
}

Field2D roundField(const Field2D& f) {
    Field2D out(f.nelx(), f.nely());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = f[i] >= 0.5 ? 1.0 : 0.0;
    return out;
}

void validateDensity(const Field2D& rho) {
    if (rho.empty())
        throw ParameterError("density field is empty");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double v = rho[i];
        if (!(v >= 0.0 && v <= 1.0))
            throw ParameterError("density value " + std::to_string(v) +
                                 " at element " + std::to_string(i) +
                                 " outside [0, 1]");
    }
}

} // namespace topo
