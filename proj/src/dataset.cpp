#include "topo/dataset.hpp"

#include <cstdio>
#include <fstream>

#include "topo/fea.hpp"

namespace topo {

namespace {

std::string samplePath(std::size_t index) {
    char name[32];
    std::snprintf(name, sizeof(name), "sample_%06zu.bin", index);
    return std::string("samples/") + name;
}

[[noreturn]] void failSample(std::size_t index, const std::string& what) {
    throw FormatError("sample " + std::to_string(index) + ": " + what);
}

Tensor32 mirrorTensor(const Tensor32& src, bool flip_x, bool flip_y) {
    Tensor32 out(src.nelx, src.nely, src.channels);
    for (int c = 0; c < src.channels; ++c)
        for (int ey = 0; ey < src.nely; ++ey)
            for (int ex = 0; ex < src.nelx; ++ex) {
                const int mx = flip_x ? src.nelx - 1 - ex : ex;
                const int my = flip_y ? src.nely - 1 - ey : ey;
                out.at(c, mx, my) = src.at(c, ex, ey);
            }
    // Mirroring reverses the corresponding force component.
    if (flip_x)
        for (int ey = 0; ey < out.nely; ++ey)
            for (int ex = 0; ex < out.nelx; ++ex)
                out.at(1, ex, ey) = -out.at(1, ex, ey);
    if (flip_y)
        for (int ey = 0; ey < out.nely; ++ey)
            for (int ex = 0; ex < out.nelx; ++ex)
                out.at(2, ex, ey) = -out.at(2, ex, ey);
    return out;
}

SampleRecord mirrorRecord(const SampleRecord& rec, bool flip_x, bool flip_y,
                          const char* tag) {
    const GridDomain grid(rec.tensor.nelx, rec.tensor.nely);
    SampleRecord out;
    out.tensor = mirrorTensor(rec.tensor, flip_x, flip_y);
    out.meta = rec.meta;
    out.meta.augmented = tag;
    const LoadCase mirrored = mirrorLoadCase(
        LoadCase{rec.meta.forces, rec.meta.fixed_dofs, rec.meta.bc_template_id},
        grid, flip_x, flip_y);
    out.meta.forces = mirrored.forces;
    out.meta.fixed_dofs = mirrored.fixed_dofs;
    return out;
}

} // namespace

const std::vector<std::string>& datasetChannelNames() {
    static const std::vector<std::string> names = {
        "initial_density", "force_x", "force_y",
        "von_mises", "strain_energy_density", "target_density"};
    return names;
}

nlohmann::json SampleMeta::toJson() const {
    nlohmann::json forces_json = nlohmann::json::array();
    for (const PointForce& f : forces)
        forces_json.push_back({f.node, f.fx, f.fy});
    return {
        {"augmented", augmented},
        {"bc_template", bc_template_id},
        {"converged", converged},
        {"fixed_dofs", fixed_dofs},
        {"forces", forces_json},
        {"source_sample", source_sample},
        {"stream_seed", stream_seed},
        {"total_compliance", total_compliance},
    };
}

SampleMeta SampleMeta::fromJson(const nlohmann::json& j) {
    SampleMeta m;
    m.augmented = j.at("augmented").get<std::string>();
    m.bc_template_id = j.at("bc_template").get<std::string>();
    m.converged = j.at("converged").get<bool>();
    m.fixed_dofs = j.at("fixed_dofs").get<std::vector<int>>();
    for (const auto& f : j.at("forces"))
        m.forces.push_back({f.at(0).get<int>(), f.at(1).get<double>(),
                            f.at(2).get<double>()});
    m.source_sample = j.at("source_sample").get<int>();
    m.stream_seed = j.at("stream_seed").get<std::uint64_t>();
    m.total_compliance = j.at("total_compliance").get<double>();
    return m;
}

SampleRecord encodeSample(const GridDomain& grid, const LoadCase& lc,
                          const MaterialModel& mat, double volfrac) {
    if (!(volfrac > 0.0) || !(volfrac < 1.0))
        throw ParameterError("encodeSample: volfrac must lie in (0, 1)");
    lc.validate(grid);

    SampleRecord rec;
    rec.tensor = Tensor32(grid.nelx, grid.nely, kSampleChannels);
    rec.meta.bc_template_id = lc.bc_template_id;
    rec.meta.forces = lc.forces;
    rec.meta.fixed_dofs = lc.fixed_dofs;

    rec.tensor.setChannel(0, Field2D(grid.nelx, grid.nely, volfrac));

    // Each point force is spread equally over the elements adjacent to its
    // node: 4 in the interior, 2 on an edge, 1 at a corner. Accumulation is
    // done in doubles and cast once, so coincident forces stay deterministic.
    Field2D fx_map(grid.nelx, grid.nely);
    Field2D fy_map(grid.nelx, grid.nely);
    for (const PointForce& f : lc.forces) {
        const int nx = grid.nodeX(f.node);
        const int ny = grid.nodeY(f.node);
        struct { int ex, ey; } adj[4];
        int n_adj = 0;
        for (int ex : {nx - 1, nx})
            for (int ey : {ny - 1, ny})
                if (ex >= 0 && ex < grid.nelx && ey >= 0 && ey < grid.nely)
                    adj[n_adj++] = {ex, ey};
        for (int k = 0; k < n_adj; ++k) {
            fx_map(adj[k].ex, adj[k].ey) += f.fx / n_adj;
            fy_map(adj[k].ex, adj[k].ey) += f.fy / n_adj;
        }
    }
    rec.tensor.setChannel(1, fx_map);
    rec.tensor.setChannel(2, fy_map);

    const SolutionFields sol =
        solveSystem(grid, Field2D(grid.nelx, grid.nely, volfrac), mat, lc);
    rec.tensor.setChannel(3, sol.von_mises);
    rec.tensor.setChannel(4, sol.strain_energy_density);
    return rec;
}

LoadCase mirrorLoadCase(const LoadCase& lc, const GridDomain& grid,
                        bool flip_x, bool flip_y) {
    const auto mirrorNode = [&](int node) {
        const int nx = flip_x ? grid.nelx - grid.nodeX(node) : grid.nodeX(node);
        const int ny = flip_y ? grid.nely - grid.nodeY(node) : grid.nodeY(node);
        return grid.nodeId(nx, ny);
    };

    LoadCase out;
    out.bc_template_id = lc.bc_template_id;
    for (const PointForce& f : lc.forces)
        out.forces.push_back({mirrorNode(f.node),
                              flip_x ? -f.fx : f.fx,
                              flip_y ? -f.fy : f.fy});
    for (int d : lc.fixed_dofs)
        out.fixed_dofs.push_back(2 * mirrorNode(d / 2) + d % 2);
    return out;
}

std::array<SampleRecord, 3> mirrorAugment(const SampleRecord& rec) {
    return {mirrorRecord(rec, true, false, "x"),
            mirrorRecord(rec, false, true, "y"),
            mirrorRecord(rec, true, true, "xy")};
}

DatasetWriter::DatasetWriter(const std::filesystem::path& dir, int nelx, int nely,
                             nlohmann::json config)
    : dir_(dir) {
    if (nelx < 1 || nely < 1)
        throw ParameterError("DatasetWriter: resolution must be at least 1x1");
    std::filesystem::create_directories(dir_ / "samples");
    manifest_.format_version = kDatasetFormatVersion;
    manifest_.nelx = nelx;
    manifest_.nely = nely;
    manifest_.channels = datasetChannelNames();
    manifest_.config = std::move(config);
}

void DatasetWriter::append(const SampleRecord& rec) {
    if (finalized_)
        throw ParameterError("DatasetWriter: append after finalize");
    if (rec.tensor.nelx != manifest_.nelx || rec.tensor.nely != manifest_.nely ||
        rec.tensor.channels != kSampleChannels)
        throw ParameterError("DatasetWriter: sample tensor shape mismatch");

    DatasetManifest::Entry entry;
    entry.path = samplePath(manifest_.samples.size());
    entry.crc32 = payloadCrc(rec.tensor);
    entry.meta = rec.meta;
    writeTensor(dir_ / entry.path, rec.tensor);
    manifest_.samples.push_back(std::move(entry));
}

void DatasetWriter::finalize() {
    if (finalized_) return;
    finalized_ = true;

    nlohmann::json samples = nlohmann::json::array();
    for (const auto& e : manifest_.samples)
        samples.push_back({{"crc32", e.crc32},
                           {"meta", e.meta.toJson()},
                           {"path", e.path}});
    const nlohmann::json j = {
        {"channels", manifest_.channels},
        {"config", manifest_.config},
        {"count", manifest_.samples.size()},
        {"format_version", manifest_.format_version},
        {"resolution", {{"nelx", manifest_.nelx}, {"nely", manifest_.nely}}},
        {"samples", samples},
    };
    std::ofstream os(dir_ / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!os)
        throw FormatError("cannot write manifest to '" + dir_.string() + "'");
    os << j.dump(2) << "\n";
}

DatasetReader::DatasetReader(const std::filesystem::path& dir) : dir_(dir) {
    const std::filesystem::path manifest_path = dir_ / "manifest.json";
    std::ifstream is(manifest_path, std::ios::binary);
    if (!is)
        throw FormatError("dataset manifest '" + manifest_path.string() + "' not found");

    nlohmann::json j;
    try {
        is >> j;
        manifest_.format_version = j.at("format_version").get<int>();
        if (manifest_.format_version != kDatasetFormatVersion)
            throw FormatError("dataset manifest '" + manifest_path.string() +
                              "': unsupported format version " +
                              std::to_string(manifest_.format_version));
        manifest_.nelx = j.at("resolution").at("nelx").get<int>();
        manifest_.nely = j.at("resolution").at("nely").get<int>();
        manifest_.channels = j.at("channels").get<std::vector<std::string>>();
        manifest_.config = j.at("config");
        const std::size_t count = j.at("count").get<std::size_t>();
        for (const auto& s : j.at("samples")) {
            DatasetManifest::Entry e;
            e.path = s.at("path").get<std::string>();
            e.crc32 = s.at("crc32").get<std::uint32_t>();
            e.meta = SampleMeta::fromJson(s.at("meta"));
            manifest_.samples.push_back(std::move(e));
        }
        if (count != manifest_.samples.size())
            throw FormatError("dataset manifest '" + manifest_path.string() +
                              "': count field disagrees with the sample list");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("dataset manifest '" + manifest_path.string() +
                          "' is malformed: " + e.what());
    }
}

SampleRecord DatasetReader::sample(std::size_t i) const {
    if (i >= manifest_.samples.size())
        failSample(i, "index out of range (dataset has " +
                   std::to_string(manifest_.samples.size()) + " samples)");
    const DatasetManifest::Entry& e = manifest_.samples[i];

    SampleRecord rec;
    try {
        rec.tensor = readTensor(dir_ / e.path);
    } catch (const FormatError& ex) {
        failSample(i, ex.what());
    }
    if (rec.tensor.nelx != manifest_.nelx || rec.tensor.nely != manifest_.nely)
        failSample(i, "tensor is " + std::to_string(rec.tensor.nelx) + "x" +
                   std::to_string(rec.tensor.nely) + ", manifest says " +
                   std::to_string(manifest_.nelx) + "x" + std::to_string(manifest_.nely));
    if (rec.tensor.channels != kSampleChannels)
        failSample(i, "expected " + std::to_string(kSampleChannels) + " channels, got " +
                   std::to_string(rec.tensor.channels));
    if (payloadCrc(rec.tensor) != e.crc32)
        failSample(i, "payload checksum disagrees with the manifest");
    rec.meta = e.meta;
    return rec;
}

} // namespace topo
