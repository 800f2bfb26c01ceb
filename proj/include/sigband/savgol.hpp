#pragma once

#include "sigband/time_series.hpp"

#include <vector>

namespace sigband {

// Centered Savitzky-Golay convolution weights for the d-th derivative at
// unit sample spacing. weights[j] multiplies x[i + j - window/2].
std::vector<double> savgol_derivative_kernel(int window, int poly_order, int deriv);

// First derivative of a position series in deg/s via Savitzky-Golay
// (kernel output times rate_hz). The half-window at each end is flagged
// invalid in the mask.
TimeSeries velocity(const TimeSeries& ts, int window = 7, int poly_order = 2);

}  // namespace sigband
