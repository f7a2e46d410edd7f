#pragma once

#include "tevae/types.hpp"

#include <random>

namespace tevae::nn {

/// Batch of equal-length windows window-major: entry b is w x F.
using WindowMajor = std::vector<Mat>;

/// The same batch stacked step-major into one matrix: rows [t*B, (t+1)*B)
/// hold step t of every window. One layout for every recurrent layer so the
/// input/output projections run as single large matrix products.
struct Seq {
    Mat data;  // (steps * batch) x F
    Eigen::Index steps = 0;
    Eigen::Index batch = 0;

    Seq() = default;
    Seq(Eigen::Index steps_, Eigen::Index batch_, Eigen::Index features)
        : data(steps_ * batch_, features), steps(steps_), batch(batch_) {}

    Eigen::Index features() const { return data.cols(); }
    auto step(Eigen::Index t) { return data.middleRows(t * batch, batch); }
    auto step(Eigen::Index t) const { return data.middleRows(t * batch, batch); }
    Seq zeros_like() const {
        Seq out(steps, batch, features());
        out.data.setZero();
        return out;
    }
};

Seq to_seq(const WindowMajor& windows);
WindowMajor to_windows(const Seq& seq);
/// Step order reversed (window contents mirrored in time).
Seq reverse_steps(const Seq& seq);

/// Deterministic generator for init, corruption, sampling and shuffling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    double normal() { return normal_(gen_); }
    std::mt19937_64& engine() { return gen_; }

    void fill_uniform(Mat& m, double lo, double hi);
    void fill_normal(Mat& m, double std_dev);

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// ---------------------------------------------------------------------------
// Time-distributed affine map: y = x W + b, one product for the whole batch.

struct Linear {
    Mat w;  // F x O
    Mat b;  // 1 x O

    void init(Eigen::Index in, Eigen::Index out, Rng& rng);
};

Seq linear_forward(const Linear& p, const Seq& x);
// Accumulates into g (a zeroed Linear of matching shape); returns dx.
Seq linear_backward(const Linear& p, const Seq& x, const Seq& dy, Linear& g);

// ---------------------------------------------------------------------------
// LSTM over a batch. Gate order in the stacked weight matrices: i, f, g, o.

struct LstmParams {
    Mat wx;  // D x 4H
    Mat wh;  // H x 4H
    Mat b;   // 1 x 4H

    Eigen::Index hidden() const { return wh.rows(); }
    void init(Eigen::Index in, Eigen::Index hidden, Rng& rng);
};

struct LstmCache {
    Mat i, f, g, o, c, hc;  // (steps*batch) x H
    Seq h;
    const Seq* x = nullptr;  // borrowed; must outlive the backward pass
};

// Returns a reference to cache.h.
const Seq& lstm_forward(const LstmParams& p, const Seq& x, LstmCache& cache);
// Gradients accumulate into g, an LstmParams of matching shape.
Seq lstm_backward(const LstmParams& p, const LstmCache& cache, const Seq& dh, LstmParams& g);

// ---------------------------------------------------------------------------
// Bidirectional layer: forward and reversed passes concatenated per step.

struct BiLstmParams {
    LstmParams fwd, bwd;

    void init(Eigen::Index in, Eigen::Index hidden, Rng& rng);
};

struct BiLstmCache {
    LstmCache fwd, bwd;
    Seq x_rev;
};

Seq bilstm_forward(const BiLstmParams& p, const Seq& x, BiLstmCache& cache);
Seq bilstm_backward(const BiLstmParams& p, const BiLstmCache& cache, const Seq& dh,
                    BiLstmParams& g);

/// Row-wise softmax with max subtraction.
Mat softmax_rows(const Mat& scores);

}  // namespace tevae::nn
