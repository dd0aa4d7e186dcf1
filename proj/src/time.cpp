#include "crowdwarn/time.hpp"

#include "crowdwarn/errors.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

namespace crowdwarn {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

} // namespace

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::data_error: return "data_error";
        case ErrorCode::insufficient_data: return "insufficient_data";
        case ErrorCode::invalid_parameter: return "invalid_parameter";
    }
    return "error";
}

CalendarDate CalendarDate::from_ymd(int year, unsigned month, unsigned day) {
    std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                    std::chrono::day{day}};
    if (!ymd.ok()) {
        throw Error(ErrorCode::invalid_parameter,
                    "invalid calendar date " + std::to_string(year) + "-" +
                        std::to_string(month) + "-" + std::to_string(day));
    }
    return CalendarDate(std::chrono::sys_days{ymd}.time_since_epoch().count());
}

std::optional<CalendarDate> CalendarDate::parse(std::string_view text) {
    // YYYY-MM-DD, fixed width
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    std::string_view y = text.substr(0, 4), m = text.substr(5, 2), d = text.substr(8, 2);
    if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return std::nullopt;
    std::chrono::year_month_day ymd{std::chrono::year{to_int(y)},
                                    std::chrono::month{static_cast<unsigned>(to_int(m))},
                                    std::chrono::day{static_cast<unsigned>(to_int(d))}};
    if (!ymd.ok()) return std::nullopt;
    return CalendarDate(std::chrono::sys_days{ymd}.time_since_epoch().count());
}

int CalendarDate::year() const {
    std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days_}}};
    return static_cast<int>(ymd.year());
}

unsigned CalendarDate::month() const {
    std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days_}}};
    return static_cast<unsigned>(ymd.month());
}

unsigned CalendarDate::day() const {
    std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days_}}};
    return static_cast<unsigned>(ymd.day());
}

int CalendarDate::iso_weekday() const {
    std::chrono::weekday wd{std::chrono::sys_days{std::chrono::days{days_}}};
    return static_cast<int>(wd.iso_encoding());
}

std::string CalendarDate::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year(), month(), day());
    return buf;
}

HourTimestamp HourTimestamp::from_ymdh(int year, unsigned month, unsigned day, unsigned hour) {
    if (hour > 23) {
        throw Error(ErrorCode::invalid_parameter,
                    "hour-of-day out of range: " + std::to_string(hour));
    }
    CalendarDate date = CalendarDate::from_ymd(year, month, day);
    return HourTimestamp(date.day_number() * 24 + hour);
}

std::optional<HourTimestamp> HourTimestamp::parse(std::string_view text) {
    // YYYY-MM-DDTHH:00, fixed width
    if (text.size() != 16 || text[10] != 'T' || text[13] != ':') return std::nullopt;
    auto date = CalendarDate::parse(text.substr(0, 10));
    if (!date) return std::nullopt;
    std::string_view hh = text.substr(11, 2), mm = text.substr(14, 2);
    if (!all_digits(hh) || mm != "00") return std::nullopt;
    int hour = to_int(hh);
    if (hour > 23) return std::nullopt;
    return HourTimestamp(date->day_number() * 24 + hour);
}

std::string HourTimestamp::to_string() const {
    char buf[24];
    CalendarDate d = date();
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00", d.year(), d.month(), d.day(),
                  hour_of_day());
    return buf;
}

} // namespace crowdwarn
