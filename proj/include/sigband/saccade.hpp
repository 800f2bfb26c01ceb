#pragma once

#include "sigband/time_series.hpp"

#include <vector>

namespace sigband {

struct SaccadeFeatures {
    double amplitude_deg = 0.0;      // |x(offset) - x(onset)|
    double peak_velocity_dps = 0.0;  // max |velocity| over [onset, offset]
    SaccadeEvent event;              // indices relative to the snippet
};

// Snippet spanning [onset - pad, offset + pad]. Events whose padded window
// leaves the recording or touches a masked sample are rejected (callers drop
// them from batch statistics).
TimeSeries extract_snippet(const TimeSeries& ts, const SaccadeEvent& event,
                           double pad_ms = 200.0);

// Event indices are relative to `snippet`. The peak-velocity search is
// restricted to [onset, offset], not the padded surround.
SaccadeFeatures saccade_features(const TimeSeries& snippet, const SaccadeEvent& event,
                                 int sg_window = 7, int sg_poly_order = 2);

// Plumbing detector: maximal runs of |velocity| > threshold lasting at least
// min_duration_ms, in temporal order. External annotations are the primary
// event source; this exists for data without them.
std::vector<SaccadeEvent> detect_saccades(const TimeSeries& vel, double threshold_dps,
                                          double min_duration_ms);

}  // namespace sigband
