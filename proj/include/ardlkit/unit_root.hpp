#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "ardlkit/timeseries.hpp"

namespace ardlkit::unit_root {

enum class TestKind { PhillipsPerron, Adf };
enum class Deterministic { None, Constant, ConstantTrend };

std::string_view test_name(TestKind k);
TestKind parse_test(std::string_view text);              // pp|adf
std::string_view deterministic_name(Deterministic d);    // n|c|ct
Deterministic parse_deterministic(std::string_view text);

struct CriticalValues {
    double one = 0.0;
    double five = 0.0;
    double ten = 0.0;
};

/**
 * Finite-sample tau critical values for a single series from the MacKinnon
 * (2010) response surfaces: cv(T) = b_inf + b1/T + b2/T^2 + b3/T^3, where T is
 * the number of observations in the test regression.
 */
CriticalValues mackinnon_tau(Deterministic d, std::size_t nobs);

struct UnitRootResult {
    TestKind test = TestKind::PhillipsPerron;
    Deterministic deterministic = Deterministic::Constant;
    double statistic = 0.0;
    CriticalValues critical;
    bool reject_1 = false;
    bool reject_5 = false;
    bool reject_10 = false;
    int lags = 0;          // ADF lag order or PP Bartlett bandwidth
    std::size_t nobs = 0;  // observations in the test regression
    double df_t = 0.0;     // unadjusted Dickey-Fuller t on the lagged level

    // "***" / "**" / "*" / "" by the most stringent rejected level.
    std::string_view stars() const;
};

inline constexpr std::size_t kMinLength = 15;

// floor(4 (T/100)^(2/9))
int default_bandwidth(std::size_t nobs);

/**
 * Phillips-Perron Z_t. Runs y_t = mu (+ beta t) + rho y_{t-1} + u_t and corrects
 * the t-ratio of rho - 1 with a Bartlett-kernel Newey-West long-run variance of u.
 * With bandwidth 0 the statistic is the plain Dickey-Fuller t.
 */
UnitRootResult pp_test(std::span<const double> y, Deterministic d = Deterministic::Constant,
                       std::optional<int> bandwidth = std::nullopt);

/// Augmented Dickey-Fuller with the lag order picked by AIC over 0..max_lag.
UnitRootResult adf_test(std::span<const double> y, Deterministic d = Deterministic::Constant, int max_lag = 4);

UnitRootResult run(TestKind kind, std::span<const double> y, Deterministic d, int max_lag_or_bandwidth = -1);

enum class Order { I0, I1, Higher };
std::string_view order_name(Order o);

struct Classification {
    Order order = Order::Higher;
    UnitRootResult level;
    UnitRootResult difference;
};

// I0 if the level rejects at 5%, I1 if only the first difference does, Higher otherwise.
Classification classify(std::span<const double> y, TestKind kind = TestKind::PhillipsPerron,
                        Deterministic d = Deterministic::Constant);

inline Classification classify(const Series& s, TestKind kind = TestKind::PhillipsPerron,
                               Deterministic d = Deterministic::Constant) {
    return classify(s.values(), kind, d);
}

}  // namespace ardlkit::unit_root
