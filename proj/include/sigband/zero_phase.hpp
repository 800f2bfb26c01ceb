#pragma once

#include "sigband/butterworth.hpp"
#include "sigband/time_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sigband {

// Forward-backward (zero-phase) filtering. Output length equals input
// length; net group delay is zero and the magnitude response is the square
// of the single-pass response. Edges are handled by odd (point-reflected)
// extension of 3*(2*pole_count + 1) samples plus steady-state initial
// conditions, trimmed after filtering.
TimeSeries apply_zero_phase(const FilterStages& stages, const TimeSeries& ts);

// Number of extension samples added at each end for a given cascade.
std::size_t zero_phase_pad(const FilterStages& stages);

struct BandSpec {
    std::string name;
    std::optional<double> low_hz;  // nullopt = low-pass from 0
    double high_hz = 0.0;
};

// The six analysis bands: 0-25 lowpass, then 26-50, 51-75, 76-100, 101-125,
// 126-150 bandpass. Edges are used exactly as listed.
std::vector<BandSpec> default_bands();

// One zero-phase filtered copy of `ts` per band, all same length as input.
std::vector<TimeSeries> decompose_bands(const TimeSeries& ts,
                                        const std::vector<BandSpec>& bands,
                                        int order = 7);

}  // namespace sigband
