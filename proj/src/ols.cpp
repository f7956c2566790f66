#include "ardlkit/ols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ardlkit/distributions.hpp"
#include "ardlkit/error.hpp"

namespace ardlkit::ols {

DesignMatrix::DesignMatrix(Eigen::MatrixXd values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
    if (static_cast<Eigen::Index>(names_.size()) != values_.cols()) {
        throw Error(ErrorKind::Spec, "design matrix: name count does not match column count");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw Error(ErrorKind::Spec, "duplicate regressor '" + names_[i] + "'");
        }
    }
}

Eigen::Index DesignMatrix::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<Eigen::Index>(i);
    }
    throw Error(ErrorKind::Spec, "no regressor named '" + std::string(name) + "'");
}

DesignMatrix DesignMatrix::with_column(std::string name, const Eigen::VectorXd& column) const {
    if (column.size() != rows()) throw Error(ErrorKind::SampleMismatch, "appended column has wrong length");
    Eigen::MatrixXd v(rows(), cols() + 1);
    v << values_, column;
    auto names = names_;
    names.push_back(std::move(name));
    return DesignMatrix(std::move(v), std::move(names));
}

DesignMatrix DesignMatrix::without_columns(const std::vector<std::string>& drop) const {
    std::vector<Eigen::Index> keep;
    std::vector<std::string> names;
    for (Eigen::Index j = 0; j < cols(); ++j) {
        if (std::find(drop.begin(), drop.end(), names_[j]) == drop.end()) {
            keep.push_back(j);
            names.push_back(names_[j]);
        }
    }
    if (keep.size() + drop.size() != names_.size()) {
        throw Error(ErrorKind::Spec, "cannot drop regressors that are not in the design");
    }
    Eigen::MatrixXd v(rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) v.col(static_cast<Eigen::Index>(j)) = values_.col(keep[j]);
    return DesignMatrix(std::move(v), std::move(names));
}

Eigen::Index OlsFit::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<Eigen::Index>(i);
    }
    throw Error(ErrorKind::Spec, "no coefficient named '" + std::string(name) + "'");
}

namespace {

bool is_constant_column(const Eigen::VectorXd& c) {
    return c.size() > 0 && c(0) != 0.0 && (c.array() == c(0)).all();
}

}  // namespace

OlsFit fit(const DesignMatrix& X, const Eigen::VectorXd& y) {
    const Eigen::Index T = X.rows();
    const Eigen::Index k = X.cols();
    if (y.size() != T) throw Error(ErrorKind::SampleMismatch, "y length differs from design rows");
    if (T <= k) {
        throw Error(ErrorKind::DegreesOfFreedom, "need more observations (" + std::to_string(T) +
                                                     ") than regressors (" + std::to_string(k) + ")");
    }
    if (!X.values().allFinite() || !y.allFinite()) throw Error(ErrorKind::Data, "non-finite value in regression data");

    Eigen::VectorXd scale = X.values().colwise().norm().transpose();
    for (Eigen::Index j = 0; j < k; ++j) {
        if (scale(j) == 0.0) throw Error(ErrorKind::SingularDesign, "regressor '" + X.names()[j] + "' is identically zero");
    }
    const Eigen::MatrixXd Xs = X.values() * scale.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const double r0 = std::fabs(R(0, 0));
    Eigen::Index rank = k;
    for (Eigen::Index i = 0; i < k; ++i) {
        if (std::fabs(R(i, i)) < kRankTolerance * r0) {
            rank = i;
            break;
        }
    }
    if (rank < k) {
        std::string cols;
        for (Eigen::Index i = rank; i < k; ++i) {
            if (!cols.empty()) cols += ", ";
            cols += "'" + X.names()[qr.colsPermutation().indices()(i)] + "'";
        }
        throw Error(ErrorKind::SingularDesign, "design is rank deficient (rank " + std::to_string(rank) + " of " +
                                                   std::to_string(k) + "); collinear: " + cols);
    }

    OlsFit out;
    out.names = X.names();
    out.nobs = T;
    out.k = k;
    const Eigen::VectorXd beta_s = qr.solve(y);
    out.coefficients = beta_s.cwiseQuotient(scale);
    out.fitted = X.values() * out.coefficients;
    out.residuals = y - out.fitted;
    out.ssr = out.residuals.squaredNorm();
    out.sigma2 = out.ssr / static_cast<double>(T - k);

    // (Xs'Xs)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::MatrixXd inner = Rinv * Rinv.transpose();
    const auto& perm = qr.colsPermutation();
    Eigen::MatrixXd xtx_inv_s = perm * inner * perm.transpose();
    out.covariance = out.sigma2 * scale.cwiseInverse().asDiagonal() * xtx_inv_s * scale.cwiseInverse().asDiagonal();
    out.std_errors = out.covariance.diagonal().cwiseMax(0.0).cwiseSqrt();

    const double n = static_cast<double>(T);
    out.loglik = out.ssr > 0.0 ? -0.5 * n * (std::log(2.0 * std::numbers::pi) + std::log(out.ssr / n) + 1.0)
                               : std::numeric_limits<double>::infinity();
    out.aic = -2.0 * out.loglik + 2.0 * static_cast<double>(k);

    for (Eigen::Index j = 0; j < k; ++j) {
        if (is_constant_column(X.values().col(j))) out.has_intercept = true;
    }
    const double sst = out.has_intercept ? (y.array() - y.mean()).square().sum() : y.squaredNorm();
    out.r_squared = sst > 0.0 ? 1.0 - out.ssr / sst : 0.0;
    return out;
}

FStat wald_f(const OlsFit& unrestricted, const OlsFit& restricted, int m) {
    if (unrestricted.nobs != restricted.nobs) {
        throw Error(ErrorKind::SampleMismatch, "restricted and unrestricted fits use different samples (" +
                                                   std::to_string(restricted.nobs) + " vs " +
                                                   std::to_string(unrestricted.nobs) + " rows)");
    }
    if (m <= 0) throw Error(ErrorKind::Spec, "restriction count must be positive");
    FStat out;
    out.df_num = m;
    out.df_den = unrestricted.df_resid();
    const double num = std::max(0.0, restricted.ssr - unrestricted.ssr) / m;
    if (unrestricted.ssr <= 0.0) {
        out.f = num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    } else {
        out.f = num / (unrestricted.ssr / out.df_den);
    }
    out.p_value = dist::f_sf(out.f, out.df_num, out.df_den);
    return out;
}

TStat t_stat(double coef, double se, double df, std::string name) {
    TStat s{std::move(name), coef, se, 0.0, 1.0};
    if (se > 0.0) {
        s.t = coef / se;
        s.p_value = dist::student_t_two_sided(s.t, df);
    } else if (coef != 0.0) {
        s.t = std::copysign(std::numeric_limits<double>::infinity(), coef);
        s.p_value = 0.0;
    }
    return s;
}

std::vector<TStat> t_stats(const OlsFit& fit) {
    std::vector<TStat> out;
    out.reserve(fit.names.size());
    for (Eigen::Index j = 0; j < fit.k; ++j) {
        out.push_back(t_stat(fit.coefficients(j), fit.std_errors(j), fit.df_resid(), fit.names[j]));
    }
    return out;
}

int star_tier(double p) {
    if (p < 0.01) return 3;
    if (p < 0.05) return 2;
    if (p < 0.10) return 1;
    return 0;
}

std::string_view stars(double p) {
    switch (star_tier(p)) {
        case 3: return "***";
        case 2: return "**";
        case 1: return "*";
        default: return "";
    }
}

}  // namespace ardlkit::ols
