#pragma once

#include <cstddef>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

/// Dense per-element scalar field on an nelx-by-nely grid.
/// Storage is row-major with the row index y; row 0 is the top row of the
/// stored image. Access is (ex, ey) with ex the column index.
class Field2D {
public:
    Field2D() = default;

    Field2D(int nelx, int nely, double fill = 0.0)
        : nelx_(nelx), nely_(nely) {
        if (nelx < 1 || nely < 1)
            throw ParameterError("Field2D: dimensions must be at least 1x1");
        values_.assign(static_cast<std::size_t>(nelx) * nely, fill);
    }

    int nelx() const { return nelx_; }
    int nely() const { return nely_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double& operator()(int ex, int ey) { return values_[idx(ex, ey)]; }
    double operator()(int ex, int ey) const { return values_[idx(ex, ey)]; }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool sameShape(const Field2D& o) const {
        return nelx_ == o.nelx_ && nely_ == o.nely_;
    }

    double mean() const {
        if (values_.empty()) return 0.0;
        double s = 0.0;
        for (double v : values_) s += v;
        return s / static_cast<double>(values_.size());
    }

    double maxAbsDiff(const Field2D& o) const {
        double m = 0.0;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            double d = values_[i] - o.values_[i];
            if (d < 0) d = -d;
            if (d > m) m = d;
        }
        return m;
    }

private:
    std::size_t idx(int ex, int ey) const {
        return static_cast<std::size_t>(ey) * nelx_ + ex;
    }

    int nelx_ = 0;
    int nely_ = 0;
    std::vector<double> values_;
};

/// Flip columns (reflection about the vertical mid-axis).
Field2D mirrorX(const Field2D& f);

/// Flip rows (reflection about the horizontal mid-axis).
Field2D mirrorY(const Field2D& f);

/// Round every entry to {0, 1}; 0.5 rounds up.
Field2D roundField(const Field2D& f);

/// Throws ParameterError unless the field is non-empty with all values in [0, 1].
void validateDensity(const Field2D& rho);

} // namespace topo
