#include "ardlkit/reference.hpp"

#include <cmath>
#include <cstdlib>

namespace ardlkit::reference {

namespace {

// "-0.282***" -> coef, sign, stars.
Cell cell(std::string label, std::string_view text, double se) {
    Cell c;
    c.label = std::move(label);
    while (!text.empty() && text.back() == '*') {
        ++c.stars;
        text.remove_suffix(1);
    }
    c.negative = !text.empty() && text.front() == '-';
    c.coef = std::strtod(std::string(text).c_str(), nullptr);
    c.se = se;
    return c;
}

const std::string kCovid1 = "COVID-19_{t+1}";
const std::string kVix = "VIX_{t}";
const std::string kEpu1 = "EPU_{t-1}";

std::vector<Model> build() {
    std::vector<Model> m;
    {
        Model x{"wti_total", 14.36, "cointegration", {}, {}, {}, false, false, true};
        x.long_run = {cell(kCovid1, "-0.001***", 0.000), cell(kVix, "-0.282***", 0.014), cell(kEpu1, "-0.009**", 0.004),
                      cell("c", "5.987***", 0.310)};
        x.short_run = {cell("ΔOil_{t-1}", "0.536***", 0.108),      cell("ΔOil_{t-2}", "0.243*", 0.121),
                       cell("ΔCOVID-19_{t+1}", "-0.000**", 0.000), cell("ΔCOVID-19_{t}", "-0.001***", 0.000),
                       cell("ΔCOVID-19_{t-1}", "0.001***", 0.000), cell("ΔCOVID-19_{t-2}", "0.000**", 0.000),
                       cell("ΔVIX_{t}", "-0.154***", 0.026),       cell("ΔEPU_{t-1}", "0.002", 0.002)};
        x.ect = cell("ECT_{t-1}", "-1.453***", 0.151);
        m.push_back(std::move(x));
    }
    {
        Model x{"wti_china", 4.004, "cointegration", {}, {}, {}, false, false, true};
        x.long_run = {cell(kCovid1, "-0.001**", 0.000), cell(kVix, "-0.200***", 0.044), cell(kEpu1, "-0.060***", 0.011),
                      cell("c", "6.163***", 0.938)};
        x.short_run = {cell("ΔCOVID-19_{t+1}", "-0.000", 0.000), cell("ΔVIX_{t}", "-0.142***", 0.031),
                       cell("ΔVIX_{t-1}", "-0.217***", 0.031),   cell("ΔEPU_{t-1}", "-0.017***", 0.004),
                       cell("ΔEPU_{t-2}", "0.017**", 0.006),     cell("ΔEPU_{t-3}", "0.021***", 0.005),
                       cell("ΔEPU_{t-4}", "0.016***", 0.004)};
        x.ect = cell("ECT_{t-1}", "-0.821***", 0.161);
        m.push_back(std::move(x));
    }
    {
        Model x{"wti_outside_china", 1.607, "no cointegration", {}, {}, {}, false, false, true};
        x.short_run = {cell("ΔOil_{t-1}", "0.770**", 0.241),        cell("ΔOil_{t-2}", "-0.289", 0.151),
                       cell("ΔOil_{t-3}", "0.498**", 0.142),        cell("ΔCOVID-19_{t+1}", "-0.005***", 0.000),
                       cell("ΔCOVID-19_{t}", "0.000", 0.001),       cell("ΔCOVID-19_{t-1}", "-0.003*", 0.001),
                       cell("ΔCOVID-19_{t-2}", "-0.006**", 0.001),  cell("ΔVIX_{t}", "-0.087**", 0.031),
                       cell("ΔVIX_{t-1}", "-0.148**", 0.043),       cell("ΔVIX_{t-2}", "0.120*", 0.056),
                       cell("ΔEPU_{t-1}", "-0.022***", 0.004),      cell("ΔEPU_{t-2}", "0.016", 0.008),
                       cell("ΔEPU_{t-3}", "0.024", 0.007),          cell("ΔEPU_{t-4}", "0.014", 0.004)};
        x.ect = cell("ECT_{t-1}", "-0.721**", 0.189);
        m.push_back(std::move(x));
    }
    {
        Model x{"brent_total", 3.245, "cointegration at 10% significance", {}, {}, {}, false, false, true};
        x.long_run = {cell(kCovid1, "-0.001***", 0.000), cell(kVix, "-0.213***", 0.044), cell(kEpu1, "-0.041**", 0.014),
                      cell("c", "6.663***", 0.705)};
        x.short_run = {cell("ΔOil_{t-1}", "0.560**", 0.239),       cell("ΔCOVID-19_{t+1}", "-0.000", 0.000),
                       cell("ΔCOVID-19_{t}", "-0.001***", 0.000),  cell("ΔCOVID-19_{t-1}", "0.001", 0.000),
                       cell("ΔCOVID-19_{t-2}", "0.000**", 0.000),  cell("ΔVIX_{t}", "-0.076", 0.057),
                       cell("ΔVIX_{t-1}", "-0.113", 0.066),        cell("ΔVIX_{t-2}", "0.088", 0.076),
                       cell("ΔVIX_{t-3}", "-0.158*", 0.087),       cell("ΔEPU_{t-1}", "-0.015**", 0.006),
                       cell("ΔEPU_{t-2}", "0.028*", 0.013),        cell("ΔEPU_{t-3}", "0.030***", 0.008)};
        x.ect = cell("ECT_{t-1}", "-1.443***", 0.292);
        m.push_back(std::move(x));
    }
    {
        Model x{"brent_china", 2.853, "inconclusive", {}, {}, {}, false, false, true};
        x.long_run = {cell(kCovid1, "-0.001*", 0.001), cell(kVix, "-0.391*", 0.242), cell(kEpu1, "-0.056", 0.081),
                      cell("c", "7.124***", 0.933)};
        x.short_run = {cell("ΔOil_{t-1}", "-0.351", 0.226),       cell("ΔOil_{t-2}", "-0.407", 0.269),
                       cell("ΔOil_{t-3}", "-0.183", 0.238),       cell("ΔCOVID-19_{t+1}", "-0.000", 0.000),
                       cell("ΔCOVID-19_{t}", "-0.000", 0.000),    cell("ΔCOVID-19_{t-1}", "-0.000", 0.000),
                       cell("ΔVIX_{t}", "-0.173*", 0.079),        cell("ΔVIX_{t-1}", "-0.268**", 0.091),
                       cell("ΔVIX_{t-2}", "-0.022", 0.114),       cell("ΔVIX_{t-3}", "0.015", 0.101),
                       cell("ΔEPU_{t-1}", "-0.014", 0.009),       cell("ΔEPU_{t-2}", "-0.012", 0.011)};
        x.ect = cell("ECT_{t-1}", "-0.401**", 0.158);
        m.push_back(std::move(x));
    }
    {
        Model x{"brent_outside_china", 3.149, "cointegration at 10% significance", {}, {}, {}, false, false, true};
        x.long_run = {cell(kCovid1, "0.003", 0.001), cell(kVix, "-0.495**", 0.181), cell(kEpu1, "-0.120***", 0.018),
                      cell("c", "7.546***", 0.363)};
        x.short_run = {cell("ΔOil_{t-1}", "0.094**", 0.571),       cell("ΔCOVID-19_{t+1}", "-0.000", 0.000),
                       cell("ΔCOVID-19_{t}", "0.000**", 0.001),    cell("ΔCOVID-19_{t-1}", "0.008***", 0.001),
                       cell("ΔCOVID-19_{t-2}", "-0.003", 0.002),   cell("ΔVIX_{t}", "-0.060", 0.053),
                       cell("ΔVIX_{t-1}", "-0.068", 0.067),        cell("ΔVIX_{t-2}", "0.160*", 0.075),
                       cell("ΔEPU_{t-1}", "-0.038***", 0.007),     cell("ΔEPU_{t-2}", "0.041**", 0.014),
                       cell("ΔEPU_{t-3}", "0.055***", 0.013),      cell("ΔEPU_{t-4}", "0.038***", 0.009)};
        x.ect = cell("ECT_{t-1}", "-0.876***", 0.180);
        m.push_back(std::move(x));
    }
    return m;
}

}  // namespace

const std::vector<Model>& models() {
    static const std::vector<Model> m = build();
    return m;
}

const Model* find_model(std::string_view id) {
    for (const auto& m : models()) {
        if (m.id == id) return &m;
    }
    return nullptr;
}

const std::vector<SummaryRow>& summary() {
    static const std::vector<SummaryRow> rows = {
        {"oil_wti", 32.17, 58.25, 50.25, 4.690},
        {"covid_total", 32.00, 19572.0, 2339.0, 3184.0},
        {"vix", 12.85, 54.46, 22.05, 11.01},
        {"epu", 22.33, 202.5, 105.1, 36.79},
    };
    return rows;
}

const std::vector<UnitRootRow>& unit_roots() {
    static const std::vector<UnitRootRow> rows = {
        {"oil", 0.120, 0, -3.561, 2},
        {"covid_total", -6.228, 3, -39.39, 3},
        {"vix", 2.172, 0, -5.254, 3},
        {"epu", -4.785, 3, -27.61, 3},
    };
    return rows;
}

CellMatch compare(const Cell& published, double coef, int stars) {
    CellMatch m;
    const bool zero = published.coef == 0.0;
    // A published "0.000" only pins the sign when it was printed with one.
    m.sign = zero && !published.negative ? true : (coef < 0.0) == published.negative;
    m.stars = std::abs(stars - published.stars) <= kStarTolerance;
    const double band = kMagnitudeTolerance * std::fabs(published.coef) + 0.0005;
    m.magnitude = std::fabs(coef - published.coef) <= band;
    return m;
}

}  // namespace ardlkit::reference
