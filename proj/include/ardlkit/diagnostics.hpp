#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ardlkit/ols.hpp"

namespace ardlkit::diag {

inline constexpr double kLevel = 0.05;

/// An LM-type test. Degenerate inputs (no residual variation, no degrees of
/// freedom left for the auxiliary regression) report p = 1 with a note.
struct LmTest {
    double stat = 0.0;
    double p_value = 1.0;
    int df = 0;
    bool degenerate = false;
    std::string note;

    bool reject() const { return p_value < kLevel; }
};

// Residuals on the original regressors and lags 1..lags of themselves
// (pre-sample lags set to zero); LM = T R^2 ~ chi2(lags).
LmTest breusch_godfrey(const ols::DesignMatrix& X, const ols::OlsFit& fit, int lags = 4);

// Squared residuals on a constant and their own lags 1..lags; LM = (T - lags) R^2 ~ chi2(lags).
LmTest arch_lm(const Eigen::VectorXd& residuals, int lags = 4);

struct JarqueBera {
    double stat = 0.0;
    double p_value = 1.0;
    double skewness = 0.0;
    double kurtosis = 3.0;
    bool degenerate = false;

    bool reject() const { return p_value < kLevel; }
};

// Population moments; JB = T/6 (S^2 + (K - 3)^2 / 4) ~ chi2(2).
JarqueBera jarque_bera(const Eigen::VectorXd& residuals);

struct Reset {
    double f = 0.0;
    double p_value = 1.0;
    int powers = 2;            // fitted-value powers added (2 and 3, or just 2)
    bool dropped_cube = false;  // the cubic term was collinear
    bool degenerate = false;
    std::string note;

    bool reject() const { return p_value < kLevel; }
};

// Adds powers of the (rescaled) fitted values and F-tests them.
// Throws Error(Degenerate) when the fitted values are constant.
Reset ramsey_reset(const ols::DesignMatrix& X, const Eigen::VectorXd& y, const ols::OlsFit& fit);

/**
 * Brown-Durbin-Evans CUSUM of recursive residuals, each from a refit on the
 * observations before it. With n recursive residuals and sigma^2 = sum w^2 / n,
 * the 5% bounds at step r = 1..n are +-0.948 (sqrt(n) + 2 r / sqrt(n)).
 */
struct Cusum {
    std::vector<double> path;
    std::vector<double> bound;       // positive half-width; the band is +-bound
    std::vector<std::size_t> index;  // sample observation each point belongs to
    std::size_t first = 0;           // first observation with a recursive residual
    bool truncated = false;          // rank-deficient early windows were skipped
    bool stable = true;
    bool degenerate = false;
};

inline constexpr double kCusumA = 0.948;

Cusum cusum(const ols::DesignMatrix& X, const Eigen::VectorXd& y);

struct Report {
    LmTest serial;
    LmTest arch;
    JarqueBera normality;
    Reset reset;
    Cusum cusum;
};

Report run_all(const ols::DesignMatrix& X, const Eigen::VectorXd& y, const ols::OlsFit& fit, int lags = 4);

std::string serial_verdict(const LmTest& t);
std::string arch_verdict(const LmTest& t);

}  // namespace ardlkit::diag
