#include "ardlkit/date.hpp"

#include <charconv>
#include <cstdio>

#include "ardlkit/error.hpp"

namespace ardlkit {

namespace {

bool parse_uint(std::string_view s, unsigned& out) {
    if (s.empty()) return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

Date Date::parse(std::string_view text) {
    unsigned y = 0, m = 0, d = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !parse_uint(text.substr(0, 4), y) ||
        !parse_uint(text.substr(5, 2), m) || !parse_uint(text.substr(8, 2), d)) {
        throw Error(ErrorKind::Parse, "invalid ISO-8601 date '" + std::string(text) + "'");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{static_cast<int>(y)},
                                          std::chrono::month{m}, std::chrono::day{d}};
    if (!ymd.ok()) {
        throw Error(ErrorKind::Parse, "invalid calendar date '" + std::string(text) + "'");
    }
    return Date(std::chrono::sys_days{ymd});
}

std::string Date::iso() const {
    const std::chrono::year_month_day ymd{sys_days()};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

unsigned Date::iso_weekday_index() const {
    return std::chrono::weekday{sys_days()}.iso_encoding() - 1;
}

}  // namespace ardlkit
