#pragma once

#include "sigband/time_series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sigband {

// Half the peak-to-peak range. Phase-sensitive on purpose: it measures what
// a raw sample grid can see, not what reconstruction could recover.
double estimate_amplitude(const TimeSeries& ts);

enum class AnalysisDomain { frequency, time };

// 2x rule for frequency-domain work, 10x rule for time-domain work.
double min_sampling_rate(double max_signal_freq_hz, AnalysisDomain domain);

struct SamplingSweepRow {
    double samples_per_period = 0.0;
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

struct SamplingSweepResult {
    std::vector<SamplingSweepRow> rows;
    int trials = 0;
    std::uint64_t seed = 0;
};

// For each N: `trials` unit sines sampled at N per period with phase uniform
// in [0, 2pi), 100 whole periods each, amplitude estimated and summarized by
// quantiles. Per-trial random streams derive from (seed, N index, trial), so
// results are bit-identical for a given seed.
SamplingSweepResult sweep_sampling(double freq_hz, std::span<const double> samples_per_period,
                                   int trials, std::uint64_t seed);

}  // namespace sigband
