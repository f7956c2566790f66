#include "ardlkit/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "ardlkit/distributions.hpp"
#include "ardlkit/error.hpp"

namespace ardlkit::diag {

namespace {

LmTest degenerate_lm(int df, std::string note) {
    LmTest t;
    t.df = df;
    t.degenerate = true;
    t.note = std::move(note);
    return t;
}

bool no_variation(const Eigen::VectorXd& v) {
    if (v.size() == 0) return true;
    const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    return (v.array() - v.mean()).abs().maxCoeff() <= 1e-12 * scale;
}

}  // namespace

LmTest breusch_godfrey(const ols::DesignMatrix& X, const ols::OlsFit& fit, int lags) {
    if (lags < 1) throw Error(ErrorKind::Config, "serial correlation test needs at least one lag");
    const Eigen::VectorXd& e = fit.residuals;
    const auto T = e.size();
    if (T - X.cols() - lags <= 0) return degenerate_lm(lags, "no degrees of freedom for the auxiliary regression");
    if (no_variation(e) && std::fabs(e.mean()) <= 1e-12) return degenerate_lm(lags, "residuals are identically zero");

    ols::DesignMatrix aux = X;
    for (int l = 1; l <= lags; ++l) {
        Eigen::VectorXd col = Eigen::VectorXd::Zero(T);
        for (Eigen::Index t = l; t < T; ++t) col(t) = e(t - l);
        aux = aux.with_column("resid.L" + std::to_string(l), col);
    }
    ols::OlsFit a;
    try {
        a = ols::fit(aux, e);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SingularDesign) throw;
        return degenerate_lm(lags, "auxiliary regression is singular");
    }
    LmTest t;
    t.df = lags;
    // Residuals are orthogonal to X, so with or without a constant the
    // uncentered R^2 of the auxiliary regression is what the statistic needs.
    const double tss = e.squaredNorm();
    const double r2 = tss > 0 ? 1.0 - a.ssr / tss : 0.0;
    t.stat = static_cast<double>(T) * std::max(r2, 0.0);
    t.p_value = dist::chi2_sf(t.stat, lags);
    return t;
}

LmTest arch_lm(const Eigen::VectorXd& residuals, int lags) {
    if (lags < 1) throw Error(ErrorKind::Config, "ARCH test needs at least one lag");
    const Eigen::VectorXd e2 = residuals.array().square();
    const auto n = e2.size() - lags;
    if (n - (lags + 1) <= 0) return degenerate_lm(lags, "too few observations for the auxiliary regression");
    if (no_variation(e2)) return degenerate_lm(lags, "squared residuals are constant");

    Eigen::MatrixXd Z(n, lags + 1);
    std::vector<std::string> names{"const"};
    for (int l = 1; l <= lags; ++l) names.push_back("resid2.L" + std::to_string(l));
    for (Eigen::Index t = 0; t < n; ++t) {
        Z(t, 0) = 1.0;
        for (int l = 1; l <= lags; ++l) Z(t, l) = e2(t + lags - l);
    }
    ols::OlsFit a;
    try {
        a = ols::fit(ols::DesignMatrix(std::move(Z), std::move(names)), e2.tail(n));
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SingularDesign) throw;
        return degenerate_lm(lags, "auxiliary regression is singular");
    }
    LmTest t;
    t.df = lags;
    t.stat = static_cast<double>(n) * std::max(a.r_squared, 0.0);
    t.p_value = dist::chi2_sf(t.stat, lags);
    return t;
}

JarqueBera jarque_bera(const Eigen::VectorXd& residuals) {
    JarqueBera j;
    const auto T = static_cast<double>(residuals.size());
    if (residuals.size() < 3) {
        j.degenerate = true;
        return j;
    }
    const Eigen::ArrayXd c = residuals.array() - residuals.mean();
    const double m2 = c.square().mean();
    if (m2 <= 0.0 || no_variation(residuals)) {
        j.degenerate = true;
        return j;
    }
    j.skewness = c.cube().mean() / std::pow(m2, 1.5);
    j.kurtosis = c.square().square().mean() / (m2 * m2);
    j.stat = T / 6.0 * (j.skewness * j.skewness + 0.25 * (j.kurtosis - 3.0) * (j.kurtosis - 3.0));
    j.p_value = std::exp(-j.stat / 2.0);
    return j;
}

Reset ramsey_reset(const ols::DesignMatrix& X, const Eigen::VectorXd& y, const ols::OlsFit& fit) {
    const Eigen::VectorXd& yhat = fit.fitted;
    if (no_variation(yhat)) throw Error(ErrorKind::Degenerate, "RESET needs non-constant fitted values");
    const Eigen::VectorXd z = yhat / yhat.cwiseAbs().maxCoeff();
    const Eigen::VectorXd z2 = z.array().square();
    const Eigen::VectorXd z3 = z.array().cube();

    Reset r;
    const auto df_left = y.size() - X.cols();
    if (df_left - 2 <= 0) {
        r.degenerate = true;
        r.note = "no degrees of freedom for the augmented regression";
        return r;
    }
    ols::OlsFit u;
    try {
        u = ols::fit(X.with_column("fitted^2", z2).with_column("fitted^3", z3), y);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SingularDesign) throw;
        try {
            u = ols::fit(X.with_column("fitted^2", z2), y);
            r.powers = 1;
            r.dropped_cube = true;
            r.note = "cubic fitted term collinear and dropped";
        } catch (const Error& err2) {
            if (err2.kind() != ErrorKind::SingularDesign) throw;
            r.degenerate = true;
            r.note = "fitted-value powers are collinear with the regressors";
            return r;
        }
    }
    if (u.ssr <= 0.0 && fit.ssr <= 0.0) {
        r.degenerate = true;
        r.note = "perfect fit";
        return r;
    }
    const auto f = ols::wald_f(u, fit, r.dropped_cube ? 1 : 2);
    r.f = f.f;
    r.p_value = f.p_value;
    r.powers = r.dropped_cube ? 1 : 2;
    return r;
}

Cusum cusum(const ols::DesignMatrix& X, const Eigen::VectorXd& y) {
    const auto& V = X.values();
    const auto T = V.rows();
    const auto k = V.cols();
    Cusum c;
    std::vector<double> w;
    std::vector<std::size_t> idx;
    for (Eigen::Index t = k; t < T; ++t) {
        const Eigen::MatrixXd Xt = V.topRows(t);
        // Equilibrate columns as the OLS engine does before the rank decision.
        Eigen::VectorXd norms = Xt.colwise().norm().transpose();
        for (Eigen::Index j = 0; j < k; ++j) norms(j) = norms(j) > 0 ? norms(j) : 1.0;
        const Eigen::MatrixXd Xs = Xt * norms.cwiseInverse().asDiagonal();
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
        qr.setThreshold(ols::kRankTolerance);
        bool full = qr.rank() == k;
        if (full) {
            const auto& R = qr.matrixR();
            full = std::fabs(R(k - 1, k - 1)) / std::fabs(R(0, 0)) >= ols::kRankTolerance;
        }
        if (!full) {
            if (!w.empty()) {
                // A later window lost rank; the recursion cannot continue past it.
                c.truncated = true;
                break;
            }
            c.truncated = true;
            continue;
        }
        const Eigen::VectorXd b = qr.solve(y.head(t));
        const Eigen::VectorXd xs = V.row(t).transpose().cwiseQuotient(norms);
        // x'(X'X)^-1 x on the scaled problem equals the unscaled one.
        const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
        const Eigen::VectorXd px = qr.colsPermutation().transpose() * xs;
        const Eigen::VectorXd v = R.transpose().template triangularView<Eigen::Lower>().solve(px);
        const double h = v.squaredNorm();
        w.push_back((y(t) - xs.dot(b)) / std::sqrt(1.0 + h));
        idx.push_back(static_cast<std::size_t>(t));
    }
    const auto n = static_cast<double>(w.size());
    if (w.empty()) {
        c.degenerate = true;
        return c;
    }
    c.first = idx.front();
    double s2 = 0.0;
    for (double v : w) s2 += v * v;
    s2 /= n;
    if (s2 <= 0.0) {
        c.degenerate = true;
        c.path.assign(w.size(), 0.0);
        for (std::size_t r = 0; r < w.size(); ++r) {
            c.bound.push_back(kCusumA * (std::sqrt(n) + 2.0 * static_cast<double>(r + 1) / std::sqrt(n)));
        }
        c.index = idx;
        return c;
    }
    const double s = std::sqrt(s2);
    double acc = 0.0;
    for (std::size_t r = 0; r < w.size(); ++r) {
        acc += w[r] / s;
        const double b = kCusumA * (std::sqrt(n) + 2.0 * static_cast<double>(r + 1) / std::sqrt(n));
        c.path.push_back(acc);
        c.bound.push_back(b);
        if (std::fabs(acc) > b) c.stable = false;
    }
    c.index = std::move(idx);
    return c;
}

Report run_all(const ols::DesignMatrix& X, const Eigen::VectorXd& y, const ols::OlsFit& fit, int lags) {
    Report r;
    r.serial = breusch_godfrey(X, fit, lags);
    r.arch = arch_lm(fit.residuals, lags);
    r.normality = jarque_bera(fit.residuals);
    r.reset = ramsey_reset(X, y, fit);
    r.cusum = cusum(X, y);
    return r;
}

std::string serial_verdict(const LmTest& t) {
    if (t.degenerate) return "not testable";
    return t.reject() ? "serial correlation" : "no serial correlation";
}

std::string arch_verdict(const LmTest& t) {
    if (t.degenerate) return "not testable";
    return t.reject() ? "ARCH effects" : "no ARCH effects";
}

}  // namespace ardlkit::diag
