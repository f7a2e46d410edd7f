#pragma once

#include "tevae/model.hpp"
#include "tevae/types.hpp"

#include <filesystem>

namespace tevae::io {

// ---------------------------------------------------------------------------
// Dataset directory: <dir>/<split>/<id>.csv plus <id>.meta.json sidecars.

struct SequenceMeta {
    std::string id;
    double rate_hz = 0.0;
    std::string split;
    std::string cycle_class;
    GroundTruth gt;
};

void write_sequence_csv(const std::filesystem::path& path, const Sequence& seq);
Sequence read_sequence_csv(const std::filesystem::path& path, double rate_hz,
                           const std::string& id);

void write_sequence_meta(const std::filesystem::path& path, const SequenceMeta& meta);
SequenceMeta read_sequence_meta(const std::filesystem::path& path);

struct DatasetEntry {
    Sequence seq;
    SequenceMeta meta;
};

void write_entry(const std::filesystem::path& dataset_dir, const Sequence& seq,
                 const SequenceMeta& meta);
std::vector<DatasetEntry> load_split(const std::filesystem::path& dataset_dir,
                                     const std::string& split);

void save_norm_stats(const std::filesystem::path& path, const NormStats& stats,
                     const std::vector<std::string>& channel_names);
NormStats load_norm_stats(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Binary array container: magic, JSON header (names/shapes/metadata), then
// raw little-endian doubles. Round-trips bit-exactly.

struct NamedArray {
    std::string name;
    Mat values;
};

void save_arrays(const std::filesystem::path& path, const std::string& meta_json,
                 const std::vector<NamedArray>& arrays);
std::pair<std::string, std::vector<NamedArray>> load_arrays(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Model checkpoints.

struct Checkpoint {
    model::TevaeParams params;
    int epoch = 0;
    double val_nll = 0.0;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Preprocessed window sets.

struct WindowFile {
    nn::WindowMajor windows;
    Eigen::Index w = 0;
    Eigen::Index shift = 0;
};

void save_windows(const std::filesystem::path& path, const WindowFile& wf);
WindowFile load_windows(const std::filesystem::path& path);

}  // namespace tevae::io
