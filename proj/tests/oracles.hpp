#pragma once

// Test-only reference routines. Deliberately naive and independent of the
// library's QR path.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;  // row-major, rows x cols

// Gauss-Jordan elimination with partial pivoting on the explicitly formed normal equations.
inline std::vector<double> normal_equations(const Matrix& X, const std::vector<double>& y) {
    const std::size_t T = X.size(), k = X.at(0).size();
    Matrix A(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            long double s = 0.0L;
            for (std::size_t t = 0; t < T; ++t) s += static_cast<long double>(X[t][i]) * X[t][j];
            A[i][j] = static_cast<double>(s);
        }
        long double s = 0.0L;
        for (std::size_t t = 0; t < T; ++t) s += static_cast<long double>(X[t][i]) * y[t];
        A[i][k] = static_cast<double>(s);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r) {
            if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
        }
        if (A[piv][c] == 0.0) throw std::runtime_error("oracle: singular normal equations");
        std::swap(A[c], A[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c) continue;
            const double f = A[r][c] / A[c][c];
            for (std::size_t j = c; j <= k; ++j) A[r][j] -= f * A[c][j];
        }
    }
    std::vector<double> beta(k);
    for (std::size_t i = 0; i < k; ++i) beta[i] = A[i][k] / A[i][i];
    return beta;
}

inline double ssr(const Matrix& X, const std::vector<double>& y, const std::vector<double>& beta) {
    double s = 0.0;
    for (std::size_t t = 0; t < X.size(); ++t) {
        double f = 0.0;
        for (std::size_t j = 0; j < beta.size(); ++j) f += X[t][j] * beta[j];
        s += (y[t] - f) * (y[t] - f);
    }
    return s;
}

}  // namespace oracle
