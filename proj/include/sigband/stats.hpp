#pragma once

#include <span>
#include <vector>

namespace sigband {

// Median with the mean-of-middle-two convention for even counts.
double median(std::span<const double> values);

// Raw median absolute deviation (no 1.4826 consistency scaling).
double mad(std::span<const double> values);

// Linear-interpolation quantile (R type 7); q in [0, 1].
double quantile(std::span<const double> values, double q);

// Two-sided Student-t CDF machinery. cdf is computed through the
// regularized incomplete beta function; quantile inverts it by bisection.
double student_t_cdf(double t, int df);
double student_t_quantile(double p, int df);

struct TTestResult {
    double t = 0.0;
    int df = 0;
    double p_two_tailed = 1.0;
};

// Paired two-tailed t-test on d = x - y. All-zero differences give t = 0,
// p = 1; equal nonzero differences are an error (t undefined).
TTestResult paired_t_test(std::span<const double> x, std::span<const double> y);

}  // namespace sigband
