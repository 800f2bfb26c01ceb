#pragma once

#include "sigband/time_series.hpp"

namespace sigband {

// sample i = amplitude * sin(2*pi*freq_hz*i/rate_hz + phase_rad)
TimeSeries gen_sine(double freq_hz, double amplitude, double phase_rad, double rate_hz,
                    std::size_t n_samples);

struct SyntheticSaccadeSpec {
    double amplitude_deg = 0.0;
    double duration_ms = 0.0;  // onset-to-offset span, > 0
    double onset_ms = 0.0;
    double baseline_deg = 0.0;
};

struct SyntheticSaccade {
    TimeSeries series;
    SaccadeEvent event;
    double peak_velocity_dps = 0.0;  // analytic |x'(t)| maximum, deg/s
};

// Logistic position profile centered in [onset, onset + duration]. The time
// constant is duration_ms / kLogisticSteepness, so the waveform reaches its
// plateaus to within ~2e-7 of the commanded amplitude at the event edges.
inline constexpr double kLogisticSteepness = 32.0;

SyntheticSaccade gen_synthetic_saccade(const SyntheticSaccadeSpec& spec, double rate_hz,
                                       double total_ms);

}  // namespace sigband
