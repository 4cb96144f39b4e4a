#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topo/dataset.hpp"
#include "topo/sampling.hpp"
#include "topo/simp.hpp"

namespace topo {

struct GenerateConfig {
    SamplingConfig sampling;                       // grid, forces, seed
    SimpConfig simp;                               // volfrac, rmin, optimizer knobs
    MaterialModel material;
    std::vector<std::string> template_ids = {"a", "b"};
    int count = 0;
    bool augment = false;                          // add x, y and xy mirrors
    int jobs = 0;                                  // parallel workers; 0 = all cores

    void validate() const;
    nlohmann::json toJson() const;
};

/// Fully deterministic function of (config, index): draws the load case from
/// the sample's own seed stream, encodes the input channels, runs the
/// optimizer and fills the target channel.
SampleRecord generateSample(const GenerateConfig& cfg, int index);

/// Generates cfg.count samples (4x that with augmentation) into out_dir.
/// Samples are computed in parallel chunks but written strictly in index
/// order, so reruns with identical configuration are byte-identical.
/// Progress lines go to *progress when given (never to the data files).
void generateDataset(const GenerateConfig& cfg, const std::filesystem::path& out_dir,
                     std::ostream* progress = nullptr);

} // namespace topo
