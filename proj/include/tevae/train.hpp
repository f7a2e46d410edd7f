#pragma once

#include "tevae/model.hpp"

namespace tevae::train {

/// Cyclic KL annealing: a low grace ramp, then repeating linear cycles.
struct AnnealSchedule {
    int grace_epochs = 25;
    double grace_beta_max = 1e-8;
    int cycle_epochs = 25;
    double cycle_beta_max = 1e-2;
};

double kl_weight(int epoch, const AnnealSchedule& s);

struct TrainConfig {
    Eigen::Index batch_size = 64;
    int max_epochs = 2500;
    int patience = 250;
    double corrupt_std = 0.01;
    std::uint64_t seed = 1;
    double learning_rate = 1e-3;
    AnnealSchedule anneal;
    bool verbose = false;
};

/// Additive Gaussian input corruption; the reconstruction target stays clean.
nn::WindowMajor corrupt(const nn::WindowMajor& x, double std_dev, nn::Rng& rng);

/// Adaptive-moment optimizer with the never-decreasing second-moment rule.
class AmsGrad {
public:
    AmsGrad(const model::TevaeParams& shape, double lr, double beta1 = 0.9,
            double beta2 = 0.999, double eps = 1e-7);

    void step(model::TevaeParams& params, const model::TevaeParams& grads);

    const model::TevaeParams& vhat() const { return vhat_; }
    long steps_taken() const { return t_; }

private:
    double lr_, beta1_, beta2_, eps_;
    long t_ = 0;
    model::TevaeParams m_, v_, vhat_;
};

struct EpochStats {
    int epoch = 0;
    double train_nll = 0.0;
    double train_kl = 0.0;
    double beta = 0.0;
    double val_nll = 0.0;
};

struct FitResult {
    model::TevaeParams best_params;
    int best_epoch = 0;
    double best_val_nll = 0.0;
    std::vector<EpochStats> history;
};

/// Mean per-window validation NLL on the deterministic inference path.
double validation_nll(const model::TevaeParams& params, const nn::WindowMajor& val,
                      Eigen::Index batch_size);

/// Full training loop: shuffle, corrupt, optimize, validate, early-stop,
/// and hand back the weights from the best epoch.
FitResult fit(const nn::WindowMajor& train_windows, const nn::WindowMajor& val_windows,
              model::TevaeParams params, const TrainConfig& cfg);

}  // namespace tevae::train
