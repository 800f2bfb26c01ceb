#pragma once

#include "sigband/time_series.hpp"

#include <string>
#include <vector>

namespace sigband {

struct PvafResult {
    std::vector<double> pvaf;    // percent-of-variance increments, one per regressor
    bool rank_deficient = false;
};

// Stepwise percent of variance accounted for: regressors enter an
// intercept-including least-squares model in the given order and entry k is
// 100 * (R^2 with regressors 1..k  -  R^2 with regressors 1..k-1).
// Collinear regressors contribute the minimum-norm increment (zero) and set
// the rank_deficient flag.
PvafResult incremental_pvaf(const TimeSeries& dependent,
                            const std::vector<TimeSeries>& regressors);

struct PvafTable {
    std::vector<std::string> band_names;
    std::vector<std::vector<double>> per_event_pvaf;  // events x bands
    std::vector<double> median_pvaf;
    std::vector<double> mad_pvaf;
};

// Columnwise median and raw MAD over per-event rows.
PvafTable aggregate_pvaf(std::vector<std::vector<double>> rows,
                         std::vector<std::string> band_names = {});

}  // namespace sigband
