#pragma once

#include "tevae/detect.hpp"
#include "tevae/metrics.hpp"
#include "tevae/model.hpp"
#include "tevae/syndata.hpp"
#include "tevae/train.hpp"

#include <filesystem>
#include <optional>

namespace tevae::cli {

struct PreprocessConfig {
    double target_rate_hz = 2.0;
    Eigen::Index window_size = 0;  // 0: estimate from autocorrelation
    Eigen::Index max_lag = 512;
    Eigen::Index min_window = 16;
};

struct ExperimentConfig {
    syndata::DatasetConfig dataset;
    PreprocessConfig preprocess;
    model::ModelConfig model;      // w and d_in are filled in from the data
    train::TrainConfig train;
    detect::ReverseWindowMethod reverse = detect::ReverseWindowMethod::mean;
    Eigen::Index detect_batch = 256;
    std::vector<std::uint64_t> seeds = {1, 2, 3};
    std::string output_dir;
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);  // canonical form
ExperimentConfig load_config(const std::filesystem::path& path);

/// Optional command-line overrides (flags beat the file).
struct Overrides {
    std::optional<std::string> variant;
    std::optional<Eigen::Index> d_k, d_z;
    std::optional<std::string> reverse;
    std::optional<std::uint64_t> seed;  // restricts runs to one seed
    std::optional<std::string> output_dir;
};

ExperimentConfig apply_overrides(ExperimentConfig cfg, const Overrides& ov);

// Derived paths inside output_dir.
std::filesystem::path checkpoint_path(const ExperimentConfig& cfg, model::Variant variant,
                                      std::uint64_t seed);
std::filesystem::path detect_dir(const ExperimentConfig& cfg, model::Variant variant,
                                 std::uint64_t seed, detect::ReverseWindowMethod method);
std::filesystem::path metrics_path(const ExperimentConfig& cfg, model::Variant variant,
                                   detect::ReverseWindowMethod method);

int run_generate(const ExperimentConfig& cfg);
int run_preprocess(const ExperimentConfig& cfg);
int run_train(const ExperimentConfig& cfg);
int run_detect(const ExperimentConfig& cfg,
               const std::optional<std::filesystem::path>& checkpoint = {});
int run_evaluate(const ExperimentConfig& cfg);
int run_benchmark(const ExperimentConfig& cfg);

/// Per-seed evaluation result plus the across-seed aggregate, as written
/// into the metrics report.
struct SeedMetrics {
    std::uint64_t seed = 0;
    metrics::Report report;
    double tau = 0.0;
};

struct AggregateMetrics {
    std::vector<SeedMetrics> per_seed;
    double f1_mean = 0, f1_std = 0;
    double precision_mean = 0, precision_std = 0;
    double recall_mean = 0, recall_std = 0;
    double auc_pr_mean = 0, auc_pr_std = 0;
    double delay_s_mean = 0, delay_s_std = 0;
    double p_rc_mean = 0, p_rc_std = 0;
    double f1_best_mean = 0, f1_best_std = 0;
};

AggregateMetrics aggregate(const std::vector<SeedMetrics>& per_seed);

/// Evaluate the detect outputs of one (variant, seed); used by evaluate,
/// benchmark and the acceptance suite.
SeedMetrics evaluate_run(const ExperimentConfig& cfg, model::Variant variant,
                         std::uint64_t seed);

}  // namespace tevae::cli
