#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ardlkit/bounds_tables.hpp"
#include "ardlkit/ols.hpp"
#include "ardlkit/timeseries.hpp"

namespace ardlkit::ardl {

/**
 * Lag structure of a conditional error-correction model with an unrestricted
 * intercept and no trend:
 *
 *     dy_t = c + d_y y_{t-1} + sum_j d_j x_{j,t-1}
 *              + sum_{i=1..a} alpha_i dy_{t-i} + sum_j sum_{l=0..b_j} beta_jl dx_{j,t-l} + e_t
 *
 * `dep_lags` is a, `reg_lags[j]` is b_j. The equivalent levels model is
 * ARDL(a + 1, b_1 + 1, ..., b_k + 1). Every model with the same `max_lag` is
 * estimated on the same sample, starting at row max_lag + 1.
 */
struct ArdlSpec {
    std::string dependent;
    std::vector<std::string> regressors;
    int max_lag = 4;
    int dep_lags = 1;
    std::vector<int> reg_lags;

    std::size_t k() const { return regressors.size(); }
    std::size_t nparams() const;
    // Levels-form label, e.g. "ARDL(2,1,3,1)".
    std::string label() const;
    // Throws Error(Spec) on out-of-range or mismatched lag orders.
    void validate() const;
};

// Spec over every regressor of `dataset` with the given orders (all zero by default).
ArdlSpec make_spec(const Dataset& dataset, int max_lag, int dep_lags, std::vector<int> reg_lags = {});

struct ArdlFit {
    ArdlSpec spec;
    ols::OlsFit ols;
    ols::DesignMatrix design;
    Eigen::VectorXd response;      // dy_t over the sample
    std::size_t first_row = 0;     // dataset row of the first sample observation
    std::vector<Date> sample;      // dates of the sample observations
    std::string intercept;         // "const"
    std::vector<std::string> levels;     // L1.<dependent>, then L1.<regressor> in order
    std::vector<std::string> short_run;  // D.* terms in design order
};

// Term names used in designs.
std::string level_name(std::string_view column);
std::string diff_name(std::string_view column, int lag);

ArdlFit fit_conditional_ecm(const Dataset& dataset, const ArdlSpec& spec);

// The same model written as y_t on its own lags and the regressors' lags, on the same sample.
ols::OlsFit fit_levels_ardl(const Dataset& dataset, const ArdlSpec& spec);

struct Candidate {
    ArdlSpec spec;
    double aic = 0.0;
};

struct Selection {
    ArdlSpec spec;
    double aic = 0.0;
    std::size_t evaluated = 0;  // candidates that could be estimated
    std::size_t skipped = 0;    // singular or without residual degrees of freedom
};

/**
 * Exhaustive AIC search: dependent lags 1..max_lag (0 when max_lag is 0) and
 * regressor lags 0..max_lag, all on the common sample. Ties go to fewer
 * parameters, then to the lexicographically smallest lag vector. `workers` = 0
 * uses the hardware concurrency; the result does not depend on it.
 */
Selection select_lags(const Dataset& dataset, int max_lag = 4, unsigned workers = 0);

enum class Conclusion { Cointegration, NoCointegration, Inconclusive };
std::string_view conclusion_name(Conclusion c);
Conclusion classify_bounds(double f, CriticalBounds bounds);

struct BoundsResult {
    double f = 0.0;
    double df_num = 0.0;
    double df_den = 0.0;
    int k = 0;
    std::size_t nobs = 0;
    double level = 0.05;
    CvTable table = CvTable::PssCase2;
    CriticalBounds bounds;
    Conclusion conclusion = Conclusion::Inconclusive;
};

/**
 * Joint test of every level coefficient via a restricted refit on the same sample.
 * Throws Error(Spec) if the fit lacks a level term.
 */
BoundsResult bounds_f_test(const ArdlFit& fit, double level = 0.05, CvTable table = CvTable::PssCase2);

// "cointegration" above the 5% upper bound, "cointegration at 10% significance"
// above only the 10% one, "no cointegration" below the 5% lower bound, else "inconclusive".
std::string graded_conclusion(double f, CvTable table, int k, std::size_t nobs);

struct LongRunTerm {
    std::string name;  // regressor column, or "const"
    double coef = 0.0;
    double se = 0.0;
    double t = 0.0;
    double p_value = 1.0;
};

struct LongRunEquation {
    std::vector<LongRunTerm> terms;  // regressors in order, then "const"
    double delta_dep = 0.0;
    double delta_dep_t = 0.0;
    bool weak_normalization = false;  // |t(d_y)| below the floor
    std::vector<std::string> warnings;

    const LongRunTerm& term(std::string_view name) const;
};

inline constexpr double kNormalizationFloor = 1.0;

// theta_j = -d_j / d_y and intercept -c / d_y with delta-method standard errors.
// Throws Error(Normalization) when d_y is exactly zero.
LongRunEquation long_run(const ArdlFit& fit, double t_floor = kNormalizationFloor);

// Same coefficients from the Bewley regression of y_t on x_t and the short-run
// terms, instrumented by the conditional-ECM regressors.
LongRunEquation long_run_bewley(const Dataset& dataset, const ArdlFit& fit, double t_floor = kNormalizationFloor);

struct EcmFit {
    ols::OlsFit ols;
    std::vector<double> ect;  // y_t minus the long-run fitted value, over the dataset
    double theta = 0.0;
    double se = 0.0;
    double t = 0.0;
    double p_value = 1.0;
    bool degenerate = false;  // ECT collinear with the other terms and dropped
    bool valid = false;       // theta < 0 and p < 0.05
    std::vector<std::string> warnings;
};

inline constexpr const char* kEctName = "ECT.L1";

// dy_t on the selected short-run terms and ECT_{t-1} over the ARDL sample.
EcmFit fit_ecm(const Dataset& dataset, const ArdlFit& fit, const LongRunEquation& lr);

}  // namespace ardlkit::ardl
