#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tevae {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// One raw sensor channel as recorded: its own clock, its own rate.
struct RawChannel {
    std::string name;
    std::vector<double> timestamps;  // seconds, strictly increasing
    std::vector<double> values;
    double native_rate_hz = 0.0;

    void validate() const;
};

/// A uniformly sampled multivariate measurement (T x d).
struct Sequence {
    Mat values;                              // T x d
    double rate_hz = 0.0;
    std::vector<std::string> channel_names;  // size d
    std::string id;

    Eigen::Index steps() const { return values.rows(); }
    Eigen::Index channels() const { return values.cols(); }
    void validate() const;
};

/// Per-channel z-score statistics pooled over a training set.
struct NormStats {
    Vec mean;
    Vec std;  // strictly positive (floored)
};

/// Fixed-length windows cut from one sequence at a constant shift.
struct WindowSet {
    std::vector<Mat> windows;  // each w x d
    Eigen::Index w = 0;
    Eigen::Index shift = 0;
    std::string source_id;
};

enum class AnomalyKind { normal, ts_anomaly, subseq_anomaly };

const char* to_string(AnomalyKind k);
AnomalyKind anomaly_kind_from_string(const std::string& s);

/// Sequence-level annotation. For subseq anomalies [t_gt, t_end] is the
/// single contiguous anomalous span; ts anomalies span the whole sequence.
struct GroundTruth {
    AnomalyKind kind = AnomalyKind::normal;
    std::string anomaly_type;  // injector name, empty for normal
    Eigen::Index t_gt = 0;
    Eigen::Index t_end = 0;
    std::set<Eigen::Index> root_cause_channels;
    Eigen::Index length = 0;

    bool anomalous() const { return kind != AnomalyKind::normal; }
    void validate() const;
};

/// Verdict for one sequence after thresholding its anomaly score.
struct DetectionOutcome {
    std::string id;
    bool anomalous = false;
    std::optional<Eigen::Index> first_flagged_step;
    std::optional<Eigen::Index> root_cause_channel;
    double max_score = 0.0;
};

}  // namespace tevae
