#pragma once

#include <string>
#include <vector>

namespace sigband {

enum class FilterKind { lowpass, highpass, bandpass };

const char* filter_kind_name(FilterKind kind);

struct FilterSpec {
    FilterKind kind = FilterKind::lowpass;
    int order = 7;              // analog prototype order
    double cutoff_low_hz = 0.0;   // highpass edge / lower bandpass edge
    double cutoff_high_hz = 0.0;  // lowpass edge / upper bandpass edge
    double rate_hz = 0.0;
};

// One second-order section; a0 is normalized to 1.
struct Biquad {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

struct FilterStages {
    std::vector<Biquad> sections;
    double overall_gain = 1.0;
    double rate_hz = 0.0;
    FilterKind kind = FilterKind::lowpass;
    int pole_count = 0;  // realized transfer-function order

    // Largest pole magnitude across sections (stability margin; < 1 is stable).
    double max_pole_magnitude() const;
};

// Butterworth design: analog prototype, cutoff prewarping, bilinear
// transform, conjugate-pair grouping into second-order sections. The
// single-pass magnitude at each cutoff is exactly 1/sqrt(2).
FilterStages design_filter(const FilterSpec& spec);

// Magnitude of the cascade on the unit circle at freq_hz. zero_phase
// returns the squared single-pass magnitude (forward-backward response).
double frequency_response(const FilterStages& stages, double freq_hz, bool zero_phase);

}  // namespace sigband
