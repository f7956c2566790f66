#pragma once

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace ardlkit {

// Calendar date stored as days since 1970-01-01. No time-of-day component.
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::chrono::sys_days d) : days_(d.time_since_epoch().count()) {}
    constexpr Date(int year, unsigned month, unsigned day)
        : Date(std::chrono::sys_days{std::chrono::year{year} / std::chrono::month{month} /
                                     std::chrono::day{day}}) {}

    // Parses YYYY-MM-DD; throws Error(Parse) on anything else.
    static Date parse(std::string_view text);

    std::string iso() const;
    constexpr int days_since_epoch() const { return days_; }
    constexpr std::chrono::sys_days sys_days() const {
        return std::chrono::sys_days{std::chrono::days{days_}};
    }
    // 0 = Monday ... 6 = Sunday
    unsigned iso_weekday_index() const;

    constexpr Date operator+(int days) const { return from_days(days_ + days); }
    constexpr Date operator-(int days) const { return from_days(days_ - days); }
    constexpr int operator-(Date other) const { return days_ - other.days_; }

    constexpr auto operator<=>(const Date&) const = default;

private:
    static constexpr Date from_days(int d) {
        Date out;
        out.days_ = d;
        return out;
    }
    int days_ = 0;
};

}  // namespace ardlkit
