#pragma once

#include "tevae/nn.hpp"

#include <functional>

namespace tevae::model {

using nn::Seq;
using nn::WindowMajor;

enum class Variant { tevae, noma };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ModelConfig {
    Eigen::Index w = 256;
    Eigen::Index d_in = 13;
    Eigen::Index d_z = 64;
    Eigen::Index heads = 8;
    Eigen::Index d_k = 0;  // 0 -> floor(d_in / heads), min 1
    Eigen::Index enc_outer = 512;
    Eigen::Index enc_inner = 256;
    Eigen::Index dec_inner = 256;
    Eigen::Index dec_outer = 512;
    Variant variant = Variant::tevae;

    Eigen::Index key_dim() const {
        if (d_k > 0) return d_k;
        return std::max<Eigen::Index>(1, d_in / heads);
    }
    void validate() const;
};

struct EncoderParams {
    nn::BiLstmParams outer, inner;
    nn::Linear head_mu, head_logvar;
};

struct AttentionParams {
    std::vector<Mat> wq, wk, wv;  // per head: d_in x d_k, d_in x d_k, d_z x d_k
    Mat wo;                       // (heads * d_k) x d_z
};

struct DecoderParams {
    nn::BiLstmParams inner, outer;
    nn::Linear head_mu, head_logvar;
};

/// All trainable state. Gradients and optimizer moments reuse the same
/// shape through zeros_like() + for_each_param().
struct TevaeParams {
    ModelConfig cfg;
    EncoderParams enc;
    AttentionParams att;
    DecoderParams dec;

    static TevaeParams init(const ModelConfig& cfg, std::uint64_t seed);
    TevaeParams zeros_like() const;

    /// Visits every parameter matrix in a fixed order with a stable name.
    void for_each_param(const std::function<void(const std::string&, Mat&)>& fn);
    void for_each_param(const std::function<void(const std::string&, const Mat&)>& fn) const;
};

struct LatentParams {
    Seq mu, logvar;  // (w*B) x d_z
};

struct OutputParams {
    Seq mu, logvar;  // (w*B) x d_in
};

struct LossBreakdown {
    double nll = 0.0;
    double kl = 0.0;
    double beta = 0.0;
    double total = 0.0;
};

/// Activations kept between forward and backward. The recurrent caches hold
/// pointers into this struct, so it must stay put until backward() is done.
struct Workspace {
    Workspace() = default;
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    Seq x;       // encoder input
    Seq target;  // reconstruction target (equals x unless denoising)
    nn::BiLstmCache enc_outer, enc_inner;
    Seq enc_h1, enc_h2;
    LatentParams lat;
    Seq lat_logvar_raw;
    Seq noise;
    Seq z;  // sampled (train) or mu (inference)
    WindowMajor x_wm, z_wm;
    // attention caches, indexed [window][head]
    std::vector<std::vector<Mat>> att_q, att_k, att_v, att_scores;
    Seq c;  // context
    nn::BiLstmCache dec_inner, dec_outer;
    Seq dec_h1, dec_h2;
    OutputParams out;
    Seq out_logvar_raw;
};

// Bounds applied to both latent and output log-variances.
inline constexpr double kLogvarMin = -10.0;
inline constexpr double kLogvarMax = 10.0;

/// q(X): two stacked BiLSTMs plus per-step affine heads.
LatentParams encode(const TevaeParams& p, const Seq& x, Workspace& ws);

/// Z = mu + exp(logvar/2) * noise.
Seq sample_latent(const LatentParams& lp, const Seq& noise);

/// Multi-head attention: queries and keys from X, values from v_src.
WindowMajor attend(const AttentionParams& p, const ModelConfig& cfg, const WindowMajor& x,
                   const WindowMajor& v_src, Workspace& ws);

/// p(C): mirrored BiLSTM stack plus per-step affine heads.
OutputParams decode(const TevaeParams& p, const Seq& c, Workspace& ws);

/// Per-window Gaussian NLL + closed-form KL to the standard normal,
/// averaged over the batch; total = nll + beta * kl.
LossBreakdown elbo_loss(const Seq& x, const OutputParams& op, const LatentParams& lp,
                        double beta);

/// Training pass: encode -> sample -> attend(X, Z) -> decode -> loss.
LossBreakdown forward_train(const TevaeParams& p, const WindowMajor& x, const WindowMajor& noise,
                            double beta, Workspace& ws);

/// Denoising variant: the model sees x but reconstructs target.
LossBreakdown forward_train(const TevaeParams& p, const WindowMajor& x,
                            const WindowMajor& target, const WindowMajor& noise, double beta,
                            Workspace& ws);

/// Inference pass: sampling disabled, mu_Z is the value matrix. Deterministic.
void forward_infer(const TevaeParams& p, const WindowMajor& x, OutputParams& out,
                   LatentParams& lat);

/// Gradient of the batch-mean total loss w.r.t. every parameter.
TevaeParams backward(const TevaeParams& p, const Workspace& ws, double beta);

}  // namespace tevae::model
