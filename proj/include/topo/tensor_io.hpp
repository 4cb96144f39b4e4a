#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "topo/field.hpp"

namespace topo {

/// Multi-channel float32 tensor on an element grid. Channel blocks are
/// contiguous; within a block the layout matches Field2D (row-major, row
/// index y).
struct Tensor32 {
    int nelx = 0;
    int nely = 0;
    int channels = 0;
    std::vector<float> data;

    Tensor32() = default;
    Tensor32(int nelx_in, int nely_in, int channels_in)
        : nelx(nelx_in), nely(nely_in), channels(channels_in),
          data(static_cast<std::size_t>(nelx_in) * nely_in * channels_in, 0.0f) {
        if (nelx_in < 1 || nely_in < 1 || channels_in < 1)
            throw ParameterError("Tensor32: dimensions must be positive");
    }

    std::size_t planeSize() const {
        return static_cast<std::size_t>(nelx) * nely;
    }

    float& at(int c, int ex, int ey) {
        return data[planeSize() * c + static_cast<std::size_t>(ey) * nelx + ex];
    }
    float at(int c, int ex, int ey) const {
        return data[planeSize() * c + static_cast<std::size_t>(ey) * nelx + ex];
    }

    Field2D channelField(int c) const;
    void setChannel(int c, const Field2D& f);

    bool operator==(const Tensor32& o) const = default;
};

/// Binary tensor container, little-endian throughout:
///   bytes 0-3   magic "TOPT"
///   bytes 4-7   u32 format version (1)
///   bytes 8-11  u32 nelx
///   bytes 12-15 u32 nely
///   bytes 16-19 u32 channel count
///   then        channels * nely * nelx float32 payload (channel blocks,
///               row-major rows of length nelx inside each block)
///   footer      u32 CRC-32 (zlib polynomial) of the payload bytes
inline constexpr std::uint32_t kTensorFormatVersion = 1;

std::uint32_t payloadCrc(const Tensor32& t);

void writeTensor(const std::filesystem::path& path, const Tensor32& t);

/// Throws FormatError on bad magic, unknown version, size mismatch or
/// checksum failure; the message names the offending file.
Tensor32 readTensor(const std::filesystem::path& path);

} // namespace topo
