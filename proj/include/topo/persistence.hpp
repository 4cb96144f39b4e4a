#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "topo/field.hpp"

namespace topo {

/// One finite persistence pair of the superlevel filtration; classes are
/// born at high values and die at lower ones, so death <= birth.
struct PersistencePair {
    double birth = 0.0;
    double death = 0.0;

    bool operator==(const PersistencePair& o) const = default;
};

/// Superlevel-set persistence of a 2D field under the pixel connectivity
/// convention: material (high values) is 8-connected, background is
/// 4-connected. Zero-persistence pairs are dropped. Essential classes (one
/// component that never dies; holes are never essential because the
/// complement's unbounded component absorbs everything) are stored as birth
/// values.
struct PersistenceDiagram {
    std::vector<PersistencePair> dim0;   // finite component pairs
    std::vector<PersistencePair> dim1;   // hole pairs
    std::vector<double> essential0;      // exactly one entry: the global max
    std::vector<double> essential1;      // always empty on a planar grid

    const std::vector<PersistencePair>& finite(int dim) const;
    const std::vector<double>& essential(int dim) const;
};

/// Computes the diagram with a union-find sweep (elder rule; ties broken by
/// linear cell index) for components, and a background sweep through a
/// virtual outside node for holes. Deterministic: output pairs are sorted by
/// (birth, death). Throws ParameterError on an empty field.
PersistenceDiagram computeDiagram(const Field2D& field);

struct BettiProfile {
    double threshold = 0.0;
    int b0 = 0;
    int b1 = 0;
};

/// Betti numbers of the superlevel set {f >= t}: finite pairs alive at t
/// (birth >= t > death) plus essentials born at or above t.
BettiProfile bettiAtThreshold(const PersistenceDiagram& d, double threshold);

/// CSV rows "dim,birth,death,essential"; essential rows carry death = -inf.
void writeDiagramCsv(std::ostream& os, const PersistenceDiagram& d);

/// Bottleneck distance split into its finite and essential contributions.
/// Essential classes only match essential classes; a count mismatch makes
/// the distance infinite, which the loss layer replaces by a finite penalty.
struct BottleneckParts {
    double finite_part = 0.0;
    double essential_part = 0.0;
    bool essential_mismatch = false;

    double value() const {
        return finite_part > essential_part ? finite_part : essential_part;
    }
};

BottleneckParts bottleneckParts(const PersistenceDiagram& a,
                                const PersistenceDiagram& b, int dim);

/// Exact bottleneck distance between the dim-k parts of two diagrams:
/// binary search over the finite candidate set with a bipartite matching
/// feasibility test. Points may match the diagonal at cost |birth-death|/2;
/// point-point cost is the sup-norm. Returns +inf on an essential-count
/// mismatch. dim must be 0 or 1.
double bottleneckDistance(const PersistenceDiagram& a,
                          const PersistenceDiagram& b, int dim);

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

} // namespace topo
