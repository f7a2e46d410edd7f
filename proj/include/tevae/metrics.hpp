#pragma once

#include "tevae/types.hpp"

namespace tevae::metrics {

enum class Label { tp, fp, fn, tn };

struct ConfusionCounts {
    long tp = 0, fp = 0, fn = 0, tn = 0;
    long tp_rc = 0, fp_rc = 0;
};

/// Sequence-level label with the early-flag rule: a flag so far before the
/// ground-truth onset that no covering window reaches it counts as a false
/// positive, not an early true positive.
Label classify(const DetectionOutcome& outcome, const GroundTruth& gt, Eigen::Index w);

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Zero-denominator convention: the affected metric is 0.
Prf prf(const ConfusionCounts& c);

/// Detection delay in steps; false negatives take t_p = last step.
Eigen::Index delay(const DetectionOutcome& outcome, const GroundTruth& gt);

double avg_delay(const std::vector<Eigen::Index>& delays);

struct PrPoint {
    double threshold = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct PrCurve {
    std::vector<PrPoint> points;  // sorted by recall, then threshold desc
    double auc_pr = 0.0;          // trapezoidal rule over recall
    PrPoint best_f1;              // max F1 over the sweep
    PrPoint closest_to_ideal;     // nearest point to (P,R) = (1,1)
};

/// Trapezoid over (recall, precision) points already sorted by recall.
double trapezoid_auc(const std::vector<PrPoint>& points);

/// Sweep thresholds over the distinct per-sequence score maxima. Each
/// threshold re-runs the first-flagged-step logic, so an early flag at one
/// threshold can become a true positive at another.
PrCurve pr_curve(const std::vector<Vec>& scores, const std::vector<GroundTruth>& gts,
                 Eigen::Index w);

/// Root-cause bookkeeping: correct-channel true positives vs everything
/// else that was flagged.
void accumulate_root_cause(const DetectionOutcome& outcome, const GroundTruth& gt, Label label,
                           ConfusionCounts& counts);

struct Report {
    ConfusionCounts counts;
    Prf prf;
    double avg_delay_steps = 0.0;
    double avg_delay_seconds = 0.0;
    double p_rc = 0.0;
    PrCurve curve;
};

/// Full per-run evaluation from score series + ground truth.
Report evaluate(const std::vector<DetectionOutcome>& outcomes,
                const std::vector<GroundTruth>& gts, const std::vector<Vec>& scores,
                Eigen::Index w, double rate_hz);

}  // namespace tevae::metrics
