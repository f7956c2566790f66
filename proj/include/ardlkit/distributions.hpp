#pragma once

// Thin wrappers over Boost.Math that accept the edge cases the tests hit
// (infinite statistics, infinite degrees of freedom).

namespace ardlkit::dist {

double normal_cdf(double x);
double normal_quantile(double p);

// Two-sided p-value for a Student-t statistic; df <= 0 or infinite uses the normal limit.
double student_t_two_sided(double t, double df);
double chi2_sf(double x, double df);
double chi2_quantile(double p, double df);
double f_sf(double x, double df1, double df2);
double f_quantile(double p, double df1, double df2);

}  // namespace ardlkit::dist
