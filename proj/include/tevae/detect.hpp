#pragma once

#include "tevae/model.hpp"

namespace tevae::detect {

enum class ReverseWindowMethod { first, last, mean };

const char* to_string(ReverseWindowMethod m);
ReverseWindowMethod reverse_method_from_string(const std::string& s);

/// Continuous per-step score with its per-channel decomposition and the
/// reconstruction distribution it came from.
struct AnomalyScore {
    Vec s;            // length T, sum of per-channel scores
    Mat per_channel;  // T x d
    Mat mu;           // T x d
    Mat sigma;        // T x d, strictly positive
};

struct Threshold {
    double tau = 0.0;
};

/// Remap overlapping window output distributions (mu, variance) back onto
/// the T-step axis. Inputs are the shift-1 window outputs in start order.
void reverse_window(const std::vector<Mat>& mu_windows, const std::vector<Mat>& var_windows,
                    Eigen::Index total_steps, ReverseWindowMethod method, Mat& mu_out,
                    Mat& var_out);

/// Window at shift 1, run deterministic inference, reverse-window, and
/// compute the continuous negative log-likelihood score.
AnomalyScore score_sequence(const Sequence& seq, const model::TevaeParams& params,
                            ReverseWindowMethod method, Eigen::Index batch_size = 256);

/// tau = the maximum score over all validation sequences.
Threshold estimate_threshold(const std::vector<Sequence>& val_sequences,
                             const model::TevaeParams& params, ReverseWindowMethod method,
                             Eigen::Index batch_size = 256);

/// Threshold a precomputed score: flagged iff any s[t] > tau; the root
/// cause is the channel with the highest score at the first flagged step.
DetectionOutcome apply_threshold(const std::string& id, const AnomalyScore& score, double tau);

DetectionOutcome detect(const Sequence& seq, const model::TevaeParams& params, double tau,
                        ReverseWindowMethod method, Eigen::Index batch_size = 256);

}  // namespace tevae::detect
