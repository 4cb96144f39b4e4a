#include "topo/sampling.hpp"

#include <cmath>

namespace topo {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t sampleStreamSeed(std::uint64_t master_seed, std::uint64_t sample_index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(sample_index + 1));
}

void SamplingConfig::validate() const {
    if (nelx < 1 || nely < 1)
        throw ParameterError("SamplingConfig: resolution must be at least 1x1");
    if (n_forces < 1)
        throw ParameterError("SamplingConfig: n_forces must be >= 1");
    if (!(force_min < force_max) || !std::isfinite(force_min) || !std::isfinite(force_max))
        throw ParameterError("SamplingConfig: force range must be finite with min < max");
}

LoadCase sampleLoadCase(Rng& rng, const BcTemplate& tpl, const GridDomain& grid,
                        const SamplingConfig& cfg) {
    cfg.validate();
    const std::vector<int> nodes = tpl.admissibleNodes(grid);

    LoadCase lc;
    lc.bc_template_id = tpl.id;
    lc.fixed_dofs = tpl.fixedDofs(grid);
    lc.forces.reserve(cfg.n_forces);
    for (int k = 0; k < cfg.n_forces; ++k) {
        PointForce f;
        f.node = nodes[rng.index(nodes.size())];
        f.fx = rng.uniform(cfg.force_min, cfg.force_max);
        f.fy = rng.uniform(cfg.force_min, cfg.force_max);
        lc.forces.push_back(f);
    }
    lc.validate(grid);
    return lc;
}

} // namespace topo
