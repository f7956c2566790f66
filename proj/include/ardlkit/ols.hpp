#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

namespace ardlkit::ols {

/// Regressor matrix with one unique name per column.
class DesignMatrix {
public:
    DesignMatrix() = default;
    DesignMatrix(Eigen::MatrixXd values, std::vector<std::string> names);

    const Eigen::MatrixXd& values() const { return values_; }
    const std::vector<std::string>& names() const { return names_; }
    Eigen::Index rows() const { return values_.rows(); }
    Eigen::Index cols() const { return values_.cols(); }
    Eigen::Index index_of(std::string_view name) const;

    DesignMatrix with_column(std::string name, const Eigen::VectorXd& column) const;
    DesignMatrix without_columns(const std::vector<std::string>& names) const;

private:
    Eigen::MatrixXd values_;
    std::vector<std::string> names_;
};

/**
 * Least-squares estimates with classical inference.
 *
 * sigma2 = SSR / (T - k) drives the standard errors. The log-likelihood uses the
 * ML variance SSR / T:
 *     loglik = -T/2 * (ln(2 pi) + ln(SSR / T) + 1),  AIC = -2 loglik + 2k.
 */
struct OlsFit {
    std::vector<std::string> names;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::MatrixXd covariance;  // sigma2 (X'X)^-1
    Eigen::VectorXd residuals;
    Eigen::VectorXd fitted;
    double ssr = 0.0;
    double sigma2 = 0.0;
    double loglik = 0.0;
    double aic = 0.0;
    double r_squared = 0.0;  // centered when the design has a constant column
    Eigen::Index nobs = 0;
    Eigen::Index k = 0;
    bool has_intercept = false;

    Eigen::Index index_of(std::string_view name) const;
    double coef(std::string_view name) const { return coefficients(index_of(name)); }
    double se(std::string_view name) const { return std_errors(index_of(name)); }
    double df_resid() const { return static_cast<double>(nobs - k); }
};

// Smallest-to-largest pivot ratio (on unit-norm columns) below which a design is singular.
inline constexpr double kRankTolerance = 1e-10;

/**
 * Column-pivoted Householder QR on column-equilibrated X.
 * Throws Error(DegreesOfFreedom) if T <= k and Error(SingularDesign), naming the
 * dependent columns, if X is rank deficient.
 */
OlsFit fit(const DesignMatrix& X, const Eigen::VectorXd& y);

struct FStat {
    double f = 0.0;
    double df_num = 0.0;
    double df_den = 0.0;
    double p_value = 1.0;
};

// F = ((SSR_r - SSR_u) / m) / (SSR_u / (T - k_u)); both fits must share the sample.
FStat wald_f(const OlsFit& unrestricted, const OlsFit& restricted, int m);

struct TStat {
    std::string name;
    double coef = 0.0;
    double se = 0.0;
    double t = 0.0;
    double p_value = 1.0;
};

std::vector<TStat> t_stats(const OlsFit& fit);
TStat t_stat(double coef, double se, double df, std::string name = {});

// "***" for p < 0.01, "**" for p < 0.05, "*" for p < 0.10, else "".
std::string_view stars(double p_value);
int star_tier(double p_value);

}  // namespace ardlkit::ols
