#pragma once

#include "tevae/types.hpp"

namespace tevae::preprocess {

/// Resample one channel to a uniform grid at target_rate.
/// Upsampling uses linear interpolation; downsampling low-passes at
/// target_rate/2 (4th-order Butterworth, applied forward-backward so the
/// phase is zero) before interpolating onto the target grid.
std::vector<double> resample_channel(const RawChannel& ch, double target_rate_hz);

/// Zero-phase 4th-order Butterworth low-pass. Exposed for tests.
std::vector<double> lowpass_zero_phase(const std::vector<double>& x,
                                       double cutoff_hz, double rate_hz);

/// Pooled per-channel mean/std over every time step of every sequence.
/// Population std, floored at 1e-8 so constant channels stay usable.
NormStats fit_norm(const std::vector<Sequence>& train);

Sequence apply_norm(const Sequence& seq, const NormStats& stats);
Sequence invert_norm(const Sequence& seq, const NormStats& stats);

struct WindowSizeConfig {
    Eigen::Index max_lag = 1024;
    Eigen::Index min_window = 16;
};

/// Largest lag of one series still significant against the +-1.96/sqrt(T)
/// white-noise band, i.e. the lag before the autocorrelation first falls
/// inside the band. 0 when already insignificant at lag 1.
Eigen::Index largest_significant_lag(const Eigen::Ref<const Vec>& x, Eigen::Index max_lag);

/// Window size: next power of two above the maximum significant lag over
/// all channels and sequences, clamped to cfg.min_window from below.
Eigen::Index estimate_window_size(const std::vector<Sequence>& train,
                                  const WindowSizeConfig& cfg = {});

/// Cut seq into floor((T-w)/shift)+1 windows; trailing remainder dropped.
WindowSet window_sequence(const Sequence& seq, Eigen::Index w, Eigen::Index shift);

}  // namespace tevae::preprocess
