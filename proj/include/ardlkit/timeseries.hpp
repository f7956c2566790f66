#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ardlkit/date.hpp"

namespace ardlkit {

enum class Transform {
    Level,
    Log,
    Log1p,  // log(1 + x), for count series that contain zero days
};

std::string_view transform_name(Transform t);
Transform parse_transform(std::string_view text);

/**
 * A named daily series. Dates are strictly increasing and every stored value
 * is finite; the constructor enforces both.
 */
class Series {
public:
    Series() = default;
    Series(std::string name, std::vector<Date> dates, std::vector<double> values,
           std::string units = {});

    const std::string& name() const { return name_; }
    const std::string& units() const { return units_; }
    std::span<const Date> dates() const { return dates_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    // Index of `d`, or size() when absent.
    std::size_t find(Date d) const;

    Series renamed(std::string name) const;

private:
    std::string name_;
    std::string units_;
    std::vector<Date> dates_;
    std::vector<double> values_;
};

Series transform(const Series& s, Transform t);

// Output position t holds input position t + k; |k| unmatched positions are dropped.
Series shift(const Series& s, int k);

Series diff(const Series& s);

/// A panel column. `series` values already carry the recorded transform and shift.
struct Column {
    Series series;
    Transform transform = Transform::Level;
    int shift = 0;
};

/**
 * Columns on a shared calendar with exactly one dependent column.
 *
 * A dataset built from an intersection is complete: every column has a value on
 * every calendar date. A union-aligned dataset (used only for plot export) may
 * hold NaN for missing days and is rejected by the estimators.
 */
class Dataset {
public:
    Dataset(std::vector<Date> calendar, std::vector<Column> columns, std::size_t dependent,
            bool complete);

    std::span<const Date> calendar() const { return calendar_; }
    std::size_t rows() const { return calendar_.size(); }
    std::size_t cols() const { return columns_.size(); }
    const std::vector<Column>& columns() const { return columns_; }
    const Column& column(std::size_t i) const { return columns_.at(i); }
    const Column& column(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;
    // Calendar-aligned values; only meaningful for complete datasets.
    std::span<const double> values(std::size_t i) const { return columns_.at(i).series.values(); }
    // NaN where a union-aligned column has no observation.
    double value_at(std::size_t col, std::size_t row) const;

    std::size_t dependent() const { return dependent_; }
    // Regressor indices in column order.
    std::vector<std::size_t> regressors() const;

    bool complete() const { return complete_; }
    void require_complete() const;

    Dataset with_dependent(std::size_t index) const;
    // Subset of rows [first, last] by date, inclusive.
    Dataset window(Date first, Date last) const;

private:
    std::vector<Date> calendar_;
    std::vector<Column> columns_;
    std::size_t dependent_;
    bool complete_;
};

/**
 * Aligns columns on a common calendar. With `intersect` the calendar is the set
 * of dates present in every column; otherwise the union, with NaN filling gaps.
 * Column order is preserved; `dependent` indexes into `columns`.
 */
Dataset align(std::vector<Column> columns, bool intersect = true, std::size_t dependent = 0);
Dataset align(const std::vector<Series>& series, bool intersect = true, std::size_t dependent = 0);

struct ColumnSummary {
    std::string name;
    std::size_t n = 0;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std = 0.0;  // divisor n - 1
};

struct SummaryStats {
    std::vector<ColumnSummary> columns;
    const ColumnSummary& at(std::string_view name) const;
};

ColumnSummary summarize(std::string name, std::span<const double> values);
SummaryStats summarize(const Dataset& dataset);

}  // namespace ardlkit
