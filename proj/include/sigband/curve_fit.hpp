#pragma once

#include <span>
#include <string>
#include <vector>

namespace sigband {

enum class MainSeqModel { power_law, exponential };

const char* main_seq_model_name(MainSeqModel model);

struct FitCoefficient {
    double value = 0.0;
    double ci_low = 0.0;   // 95% Wald confidence limits
    double ci_high = 0.0;
};

struct MainSequenceFit {
    MainSeqModel model = MainSeqModel::power_law;
    FitCoefficient coeff0;  // a (power law) or V_max (exponential)
    FitCoefficient coeff1;  // b (power law) or C (exponential)
    double r2 = 0.0;
    double adj_r2 = 0.0;
    int n_points = 0;
    std::string condition_label;
    int iterations = 0;

    double predict(double amplitude) const;
};

struct MainSeqPoint {
    double amplitude_deg = 0.0;
    double peak_velocity_dps = 0.0;
};

// Least squares in linear velocity space by damped Gauss-Newton.
// Power law y = a * x^b, initialized from log-log ordinary least squares.
MainSequenceFit fit_power_law(std::span<const MainSeqPoint> points,
                              std::string condition_label = "");

// Exponential y = V_max * (1 - exp(-x / C)), initialized at
// V_max = 1.05 * max(y), C = median(x).
MainSequenceFit fit_exponential(std::span<const MainSeqPoint> points,
                                std::string condition_label = "");

struct DifferenceCurve {
    std::vector<double> amplitudes;
    std::vector<double> diff;        // predict_ref - predict_cmp
    std::vector<double> crossovers;  // sign-change locations, linearly interpolated
};

DifferenceCurve difference_curve(const MainSequenceFit& fit_ref,
                                 const MainSequenceFit& fit_cmp,
                                 std::span<const double> amplitudes);

struct CoefficientOverlap {
    std::string condition_label;
    bool coeff0_distinct = false;  // condition CI excludes the reference estimate
    bool coeff1_distinct = false;
};

// Per-condition flags: not-distinct when the condition's 95% CI contains the
// reference point estimate.
std::vector<CoefficientOverlap> ci_overlap_report(
    const MainSequenceFit& reference, std::span<const MainSequenceFit> conditions);

}  // namespace sigband
