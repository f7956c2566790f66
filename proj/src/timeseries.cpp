#include "ardlkit/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ardlkit/error.hpp"

namespace ardlkit {

std::string_view transform_name(Transform t) {
    switch (t) {
        case Transform::Level: return "level";
        case Transform::Log: return "log";
        case Transform::Log1p: return "log1p";
    }
    return "level";
}

Transform parse_transform(std::string_view text) {
    if (text == "level") return Transform::Level;
    if (text == "log") return Transform::Log;
    if (text == "log1p") return Transform::Log1p;
    throw Error(ErrorKind::Config, "unknown transform '" + std::string(text) + "' (level|log|log1p)");
}

Series::Series(std::string name, std::vector<Date> dates, std::vector<double> values,
               std::string units)
    : name_(std::move(name)), units_(std::move(units)), dates_(std::move(dates)),
      values_(std::move(values)) {
    if (dates_.size() != values_.size()) {
        throw Error(ErrorKind::Data, "series '" + name_ + "': date and value counts differ");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorKind::Data,
                        "series '" + name_ + "': non-finite value on " + dates_[i].iso());
        }
        if (i > 0 && !(dates_[i - 1] < dates_[i])) {
            throw Error(ErrorKind::Data, "series '" + name_ + "': dates not strictly increasing at " +
                                             dates_[i].iso());
        }
    }
}

std::size_t Series::find(Date d) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d) return size();
    return static_cast<std::size_t>(it - dates_.begin());
}

Series Series::renamed(std::string name) const {
    Series out = *this;
    out.name_ = std::move(name);
    return out;
}

Series transform(const Series& s, Transform t) {
    if (t == Transform::Level) return s;
    std::vector<double> out(s.size());
    const auto v = s.values();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool ok = t == Transform::Log ? v[i] > 0.0 : v[i] >= 0.0;
        if (!ok) {
            throw Error(ErrorKind::Transform,
                        "cannot apply " + std::string(transform_name(t)) + " to '" + s.name() +
                            "': value " + std::to_string(v[i]) + " on " + s.dates()[i].iso());
        }
        out[i] = t == Transform::Log ? std::log(v[i]) : std::log1p(v[i]);
    }
    return Series(s.name() + "." + std::string(transform_name(t)),
                  {s.dates().begin(), s.dates().end()}, std::move(out), s.units());
}

Series shift(const Series& s, int k) {
    const auto n = static_cast<long>(s.size());
    if (std::labs(k) >= n) {
        throw Error(ErrorKind::Shift, "shift " + std::to_string(k) + " needs more than " +
                                          std::to_string(n) + " observations in '" + s.name() + "'");
    }
    if (k == 0) return s;
    std::vector<Date> dates;
    std::vector<double> values;
    const long m = n - std::labs(k);
    dates.reserve(m);
    values.reserve(m);
    for (long t = 0; t < n; ++t) {
        const long src = t + k;
        if (src < 0 || src >= n) continue;
        dates.push_back(s.dates()[t]);
        values.push_back(s.values()[src]);
    }
    return Series(s.name(), std::move(dates), std::move(values), s.units());
}

Series diff(const Series& s) {
    if (s.size() < 2) {
        throw Error(ErrorKind::Length, "diff needs at least 2 observations in '" + s.name() + "'");
    }
    std::vector<Date> dates(s.dates().begin() + 1, s.dates().end());
    std::vector<double> values(s.size() - 1);
    for (std::size_t t = 1; t < s.size(); ++t) values[t - 1] = s.values()[t] - s.values()[t - 1];
    return Series("D." + s.name(), std::move(dates), std::move(values), s.units());
}

Dataset::Dataset(std::vector<Date> calendar, std::vector<Column> columns, std::size_t dependent,
                 bool complete)
    : calendar_(std::move(calendar)), columns_(std::move(columns)), dependent_(dependent),
      complete_(complete) {
    if (dependent_ >= columns_.size()) {
        throw Error(ErrorKind::Data, "dataset dependent index out of range");
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (columns_[i].series.name() == columns_[j].series.name()) {
                throw Error(ErrorKind::Data, "duplicate column name '" + columns_[i].series.name() + "'");
            }
        }
    }
    if (complete_) {
        for (const auto& c : columns_) {
            if (c.series.size() != calendar_.size() ||
                !std::equal(calendar_.begin(), calendar_.end(), c.series.dates().begin())) {
                throw Error(ErrorKind::Data, "column '" + c.series.name() + "' does not cover the calendar");
            }
        }
    }
}

const Column& Dataset::column(std::string_view name) const { return columns_[index_of(name)]; }

std::size_t Dataset::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].series.name() == name) return i;
    }
    throw Error(ErrorKind::Config, "no column named '" + std::string(name) + "'");
}

double Dataset::value_at(std::size_t col, std::size_t row) const {
    const auto& s = columns_.at(col).series;
    if (complete_) return s.values()[row];
    const auto i = s.find(calendar_.at(row));
    return i == s.size() ? std::numeric_limits<double>::quiet_NaN() : s.values()[i];
}

std::vector<std::size_t> Dataset::regressors() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i != dependent_) out.push_back(i);
    }
    return out;
}

void Dataset::require_complete() const {
    if (!complete_) {
        throw Error(ErrorKind::Data, "dataset has gaps (union-aligned); estimation needs an intersection panel");
    }
}

Dataset Dataset::with_dependent(std::size_t index) const {
    return Dataset(calendar_, columns_, index, complete_);
}

Dataset Dataset::window(Date first, Date last) const {
    require_complete();
    const auto lo = std::lower_bound(calendar_.begin(), calendar_.end(), first) - calendar_.begin();
    const auto hi = std::upper_bound(calendar_.begin(), calendar_.end(), last) - calendar_.begin();
    std::vector<Date> cal(calendar_.begin() + lo, calendar_.begin() + hi);
    std::vector<Column> cols;
    for (const auto& c : columns_) {
        const auto v = c.series.values();
        cols.push_back({Series(c.series.name(), cal, {v.begin() + lo, v.begin() + hi}, c.series.units()),
                        c.transform, c.shift});
    }
    return Dataset(std::move(cal), std::move(cols), dependent_, true);
}

Dataset align(std::vector<Column> columns, bool intersect, std::size_t dependent) {
    if (columns.size() < 2) throw Error(ErrorKind::Alignment, "align needs at least two series");
    for (const auto& c : columns) {
        if (c.series.empty()) {
            throw Error(ErrorKind::Alignment, "series '" + c.series.name() + "' is empty");
        }
    }

    std::vector<Date> calendar;
    if (intersect) {
        calendar.assign(columns[0].series.dates().begin(), columns[0].series.dates().end());
        for (std::size_t i = 1; i < columns.size(); ++i) {
            const auto d = columns[i].series.dates();
            std::vector<Date> next;
            std::set_intersection(calendar.begin(), calendar.end(), d.begin(), d.end(),
                                  std::back_inserter(next));
            if (next.empty()) {
                throw Error(ErrorKind::Alignment, "no common dates once '" + columns[i].series.name() +
                                                      "' is intersected with '" +
                                                      columns[0].series.name() + "'");
            }
            calendar = std::move(next);
        }
    } else {
        for (const auto& c : columns) {
            std::vector<Date> next;
            std::set_union(calendar.begin(), calendar.end(), c.series.dates().begin(),
                           c.series.dates().end(), std::back_inserter(next));
            calendar = std::move(next);
        }
    }

    std::vector<Column> out;
    out.reserve(columns.size());
    bool complete = true;
    for (auto& c : columns) {
        const auto& s = c.series;
        if (intersect) {
            std::vector<double> v;
            v.reserve(calendar.size());
            for (Date d : calendar) v.push_back(s.values()[s.find(d)]);
            out.push_back({Series(s.name(), calendar, std::move(v), s.units()), c.transform, c.shift});
        } else {
            // Union columns keep only their own dates; Dataset::value_at reports the gaps.
            std::vector<Date> dates;
            std::vector<double> v;
            for (Date d : calendar) {
                const auto i = s.find(d);
                if (i == s.size()) {
                    complete = false;
                    continue;
                }
                dates.push_back(d);
                v.push_back(s.values()[i]);
            }
            out.push_back({Series(s.name(), std::move(dates), std::move(v), s.units()), c.transform,
                           c.shift});
        }
    }
    return Dataset(std::move(calendar), std::move(out), dependent, complete);
}

Dataset align(const std::vector<Series>& series, bool intersect, std::size_t dependent) {
    std::vector<Column> cols;
    cols.reserve(series.size());
    for (const auto& s : series) cols.push_back({s, Transform::Level, 0});
    return align(std::move(cols), intersect, dependent);
}

const ColumnSummary& SummaryStats::at(std::string_view name) const {
    for (const auto& c : columns) {
        if (c.name == name) return c;
    }
    throw Error(ErrorKind::Config, "no summary for column '" + std::string(name) + "'");
}

ColumnSummary summarize(std::string name, std::span<const double> values) {
    if (values.empty()) throw Error(ErrorKind::Length, "cannot summarize empty column '" + name + "'");
    ColumnSummary s;
    s.name = std::move(name);
    s.n = values.size();
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    // Welford
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double delta = values[i] - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (values[i] - mean);
    }
    s.mean = std::clamp(mean, s.min, s.max);
    s.std = values.size() > 1 ? std::sqrt(std::max(0.0, m2) / static_cast<double>(values.size() - 1)) : 0.0;
    return s;
}

SummaryStats summarize(const Dataset& dataset) {
    if (dataset.rows() == 0) throw Error(ErrorKind::Length, "cannot summarize an empty panel");
    SummaryStats out;
    for (const auto& c : dataset.columns()) out.columns.push_back(summarize(c.series.name(), c.series.values()));
    return out;
}

}  // namespace ardlkit
