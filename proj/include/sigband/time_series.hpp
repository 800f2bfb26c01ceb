#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sigband {

// Uniformly sampled scalar channel. Values are degrees of visual angle
// unless a caller states otherwise. valid[i] == false marks a missing
// sample (blink, dropout); the stored value at a masked index must not
// enter any computation. Immutable by convention: operations return new
// series instead of mutating.
struct TimeSeries {
    std::vector<double> samples;
    double rate_hz = 0.0;
    double start_time_ms = 0.0;
    std::vector<bool> valid;

    TimeSeries() = default;
    TimeSeries(std::vector<double> samples_in, double rate, double start_ms = 0.0);
    TimeSeries(std::vector<double> samples_in, double rate, double start_ms,
               std::vector<bool> valid_in);

    std::size_t size() const { return samples.size(); }
    double time_at_ms(std::size_t i) const {
        return start_time_ms + 1000.0 * static_cast<double>(i) / rate_hz;
    }
    // true when every sample in [first, last] is valid
    bool contiguous(std::size_t first, std::size_t last) const;
    bool contiguous() const;
};

enum class EventLabel { saccade, microsaccade, catch_up_saccade, other };

const char* event_label_name(EventLabel label);
EventLabel event_label_from_name(const std::string& name);

// onset_index and offset_index are inclusive sample indices.
struct SaccadeEvent {
    std::size_t onset_index = 0;
    std::size_t offset_index = 0;
    EventLabel label = EventLabel::saccade;
};

// One raw input sample; a NaN value means the sample is missing.
struct TimedSample {
    double t_ms = 0.0;
    double value = 0.0;
};

// Checks uniform spacing of raw (timestamp, value) pairs against an expected
// rate and builds a TimeSeries. `tolerance` bounds the relative deviation of
// each inter-sample interval from 1/expected_rate_hz.
TimeSeries validate_series(std::span<const TimedSample> raw, double expected_rate_hz,
                           double tolerance);

// Sub-series covering [start_index, end_index] inclusive, rate preserved,
// start time shifted.
TimeSeries extract_window(const TimeSeries& ts, std::size_t start_index,
                          std::size_t end_index);

}  // namespace sigband
