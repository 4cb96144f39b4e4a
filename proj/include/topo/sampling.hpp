#pragma once

#include <cstdint>
#include <random>

#include "topo/bc_templates.hpp"
#include "topo/model.hpp"

namespace topo {

/// Deterministic random stream. Built on std::mt19937_64 (whose output
/// sequence is fixed by the standard) with hand-rolled uniform mappings,
/// because the std distribution objects are implementation-defined and
/// would break cross-toolchain reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform double in [lo, hi) with 53-bit resolution.
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Unbiased uniform index in [0, n) via rejection sampling.
    std::size_t index(std::size_t n) {
        if (n == 0)
            throw ParameterError("Rng::index: n must be positive");
        const std::uint64_t threshold = (-static_cast<std::uint64_t>(n)) % n;
        for (;;) {
            const std::uint64_t r = eng_();
            if (r >= threshold)
                return static_cast<std::size_t>(r % n);
        }
    }

private:
    std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Decorrelated per-sample seed derived from the master seed, so samples can
/// be generated in parallel yet reproduce bit-identically in any order.
std::uint64_t sampleStreamSeed(std::uint64_t master_seed, std::uint64_t sample_index);

struct SamplingConfig {
    int nelx = 40;
    int nely = 80;
    int n_forces = 1;
    double force_min = -100.0;
    double force_max = 100.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Draws one load case from the template's admissible region: for each of
/// n_forces, a node index (uniform over admissible nodes in ascending id
/// order), then fx, then fy (uniform in [force_min, force_max)). The draw
/// order is fixed so a seed fully determines the case.
LoadCase sampleLoadCase(Rng& rng, const BcTemplate& tpl, const GridDomain& grid,
                        const SamplingConfig& cfg);

} // namespace topo
