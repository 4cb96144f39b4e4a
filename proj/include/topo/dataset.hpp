#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topo/model.hpp"
#include "topo/tensor_io.hpp"

namespace topo {

inline constexpr int kDatasetFormatVersion = 1;

/// Channel order inside every sample tensor. The first five are the network
/// inputs, the sixth is the optimized density target.
const std::vector<std::string>& datasetChannelNames();
inline constexpr int kSampleChannels = 6;

struct SampleMeta {
    std::string bc_template_id;
    std::vector<PointForce> forces;     // as applied (mirrored samples store remapped forces)
    std::vector<int> fixed_dofs;        // explicit, so mirrored cases stay solvable
    std::uint64_t stream_seed = 0;
    bool converged = true;
    double total_compliance = 0.0;      // final compliance of the source optimization
    std::string augmented;              // "", "x", "y" or "xy"
    int source_sample = 0;              // originating draw index

    nlohmann::json toJson() const;
    static SampleMeta fromJson(const nlohmann::json& j);
};

struct SampleRecord {
    Tensor32 tensor;   // kSampleChannels blocks
    SampleMeta meta;

    Field2D target() const { return tensor.channelField(kSampleChannels - 1); }
};

/// Input channels 0..4 for a load case: constant initial density, the x and
/// y force rasters (each force divided equally among the elements adjacent
/// to its node), and the von Mises stress and strain energy density of the
/// uniform initial-density domain. The target channel is left zero.
SampleRecord encodeSample(const GridDomain& grid, const LoadCase& lc,
                          const MaterialModel& mat, double volfrac);

/// Load case reflected about the vertical (flip_x) and/or horizontal
/// (flip_y) axis: node ids are remapped and the mirrored force component is
/// negated; fixed DOFs keep their component on the remapped node.
LoadCase mirrorLoadCase(const LoadCase& lc, const GridDomain& grid,
                        bool flip_x, bool flip_y);

/// The x, y and xy mirror images of a record, in that order. Channel planes
/// are flipped, force channels and metadata are negated/remapped to match.
/// Applying the same mirror twice returns the original bytes.
std::array<SampleRecord, 3> mirrorAugment(const SampleRecord& rec);

struct DatasetManifest {
    int format_version = kDatasetFormatVersion;
    int nelx = 0;
    int nely = 0;
    std::vector<std::string> channels;
    nlohmann::json config;

    struct Entry {
        std::string path;          // relative to the dataset directory
        std::uint32_t crc32 = 0;   // payload checksum, duplicated from the file footer
        SampleMeta meta;
    };
    std::vector<Entry> samples;
};

/// Streams samples to <dir>/samples/sample_NNNNNN.bin and writes
/// <dir>/manifest.json on finalize. Output is byte-deterministic: no
/// timestamps, sorted JSON keys, fixed float formatting.
class DatasetWriter {
public:
    DatasetWriter(const std::filesystem::path& dir, int nelx, int nely,
                  nlohmann::json config);
    void append(const SampleRecord& rec);
    void finalize();
    std::size_t count() const { return manifest_.samples.size(); }

private:
    std::filesystem::path dir_;
    DatasetManifest manifest_;
    bool finalized_ = false;
};

class DatasetReader {
public:
    explicit DatasetReader(const std::filesystem::path& dir);
    const DatasetManifest& manifest() const { return manifest_; }
    std::size_t size() const { return manifest_.samples.size(); }

    /// Reads and verifies one sample; FormatError messages name the index.
    SampleRecord sample(std::size_t i) const;

private:
    std::filesystem::path dir_;
    DatasetManifest manifest_;
};

} // namespace topo
