#include "topo/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <zlib.h>

namespace topo {

namespace {

constexpr char kMagic[4] = {'T', 'O', 'P', 'T'};

void putU32(std::vector<unsigned char>& buf, std::uint32_t v) {
    buf.push_back(static_cast<unsigned char>(v & 0xFF));
    buf.push_back(static_cast<unsigned char>((v >> 8) & 0xFF));
    buf.push_back(static_cast<unsigned char>((v >> 16) & 0xFF));
    buf.push_back(static_cast<unsigned char>((v >> 24) & 0xFF));
}

std::uint32_t getU32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) |
           (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
}

std::vector<unsigned char> payloadBytes(const Tensor32& t) {
    std::vector<unsigned char> bytes;
    bytes.reserve(t.data.size() * 4);
    for (float f : t.data)
        putU32(bytes, std::bit_cast<std::uint32_t>(f));
    return bytes;
}

std::uint32_t crcOf(const std::vector<unsigned char>& bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, bytes.data(), static_cast<uInt>(bytes.size()));
    return static_cast<std::uint32_t>(crc);
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw FormatError("tensor file '" + path.string() + "': " + what);
}

} // namespace

Field2D Tensor32::channelField(int c) const {
    if (c < 0 || c >= channels)
        throw ParameterError("Tensor32: channel " + std::to_string(c) +
                             " out of range [0, " + std::to_string(channels) + ")");
    Field2D f(nelx, nely);
    const std::size_t base = planeSize() * c;
    for (std::size_t i = 0; i < planeSize(); ++i)
        f[i] = static_cast<double>(data[base + i]);
    return f;
}

void Tensor32::setChannel(int c, const Field2D& f) {
    if (c < 0 || c >= channels)
        throw ParameterError("Tensor32: channel " + std::to_string(c) +
                             " out of range [0, " + std::to_string(channels) + ")");
    if (f.nelx() != nelx || f.nely() != nely)
        throw ParameterError("Tensor32: channel shape mismatch");
    const std::size_t base = planeSize() * c;
    for (std::size_t i = 0; i < planeSize(); ++i)
        data[base + i] = static_cast<float>(f[i]);
}

std::uint32_t payloadCrc(const Tensor32& t) {
    return crcOf(payloadBytes(t));
}

void writeTensor(const std::filesystem::path& path, const Tensor32& t) {
    if (t.nelx < 1 || t.nely < 1 || t.channels < 1)
        throw ParameterError("writeTensor: tensor is empty");

    std::vector<unsigned char> buf;
    buf.reserve(20 + t.data.size() * 4 + 4);
    buf.insert(buf.end(), kMagic, kMagic + 4);
    putU32(buf, kTensorFormatVersion);
    putU32(buf, static_cast<std::uint32_t>(t.nelx));
    putU32(buf, static_cast<std::uint32_t>(t.nely));
    putU32(buf, static_cast<std::uint32_t>(t.channels));

    const std::vector<unsigned char> payload = payloadBytes(t);
    buf.insert(buf.end(), payload.begin(), payload.end());
    putU32(buf, crcOf(payload));

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw FormatError("tensor file '" + path.string() + "': cannot open for writing");
    os.write(reinterpret_cast<const char*>(buf.data()),
             static_cast<std::streamsize>(buf.size()));
    if (!os)
        throw FormatError("tensor file '" + path.string() + "': write failed");
}

Tensor32 readTensor(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail(path, "cannot open");
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
    if (buf.size() < 24) fail(path, "truncated header");
    if (std::memcmp(buf.data(), kMagic, 4) != 0) fail(path, "bad magic");

    const std::uint32_t version = getU32(buf.data() + 4);
    if (version != kTensorFormatVersion)
        fail(path, "unsupported format version " + std::to_string(version));

    const std::uint32_t nelx = getU32(buf.data() + 8);
    const std::uint32_t nely = getU32(buf.data() + 12);
    const std::uint32_t channels = getU32(buf.data() + 16);
    if (nelx < 1 || nely < 1 || channels < 1 ||
        nelx > (1u << 20) || nely > (1u << 20) || channels > 4096)
        fail(path, "implausible dimensions");

    const std::size_t count =
        static_cast<std::size_t>(nelx) * nely * channels;
    const std::size_t expected = 20 + count * 4 + 4;
    if (buf.size() != expected)
        fail(path, "size " + std::to_string(buf.size()) + " does not match header "
             "(expected " + std::to_string(expected) + " bytes)");

    std::vector<unsigned char> payload(buf.begin() + 20, buf.end() - 4);
    const std::uint32_t stored_crc = getU32(buf.data() + buf.size() - 4);
    if (crcOf(payload) != stored_crc) fail(path, "payload checksum mismatch");

    Tensor32 t(static_cast<int>(nelx), static_cast<int>(nely),
               static_cast<int>(channels));
    for (std::size_t i = 0; i < count; ++i)
        t.data[i] = std::bit_cast<float>(getU32(payload.data() + i * 4));
    return t;
}

} // namespace topo
