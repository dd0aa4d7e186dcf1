#ifndef CROWDWARN_TIME_HPP
#define CROWDWARN_TIME_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace crowdwarn {

// Calendar date without time of day. Naive local wall-clock calendar:
// no time zones, no DST arithmetic.
class CalendarDate {
public:
    CalendarDate() = default;

    // Throws Error(invalid_parameter) on an invalid Gregorian date.
    static CalendarDate from_ymd(int year, unsigned month, unsigned day);

    // Parses "YYYY-MM-DD". Returns nullopt on malformed or invalid input.
    static std::optional<CalendarDate> parse(std::string_view text);

    static CalendarDate from_day_number(std::int64_t days) { return CalendarDate(days); }

    int year() const;
    unsigned month() const;
    unsigned day() const;

    // Days since 1970-01-01 (may be negative).
    std::int64_t day_number() const { return days_; }

    // ISO weekday: Monday=1 .. Sunday=7.
    int iso_weekday() const;

    CalendarDate plus_days(std::int64_t n) const { return CalendarDate(days_ + n); }

    std::string to_string() const; // "YYYY-MM-DD"

    auto operator<=>(const CalendarDate&) const = default;

private:
    explicit CalendarDate(std::int64_t days) : days_(days) {}
    std::int64_t days_ = 0;
};

// One wall-clock hour: a calendar date plus hour-of-day in [0, 23].
// Internally an hour count since 1970-01-01T00:00, so ordering and
// whole-hour differences are exact integer arithmetic.
class HourTimestamp {
public:
    HourTimestamp() = default;

    // Throws Error(invalid_parameter) on invalid date or hour.
    static HourTimestamp from_ymdh(int year, unsigned month, unsigned day, unsigned hour);

    // Parses the canonical "YYYY-MM-DDTHH:00" form. Returns nullopt on
    // anything else (including minutes other than 00).
    static std::optional<HourTimestamp> parse(std::string_view text);

    static HourTimestamp from_hour_number(std::int64_t hours) { return HourTimestamp(hours); }

    CalendarDate date() const { return CalendarDate::from_day_number(floor_div24(hours_)); }
    int hour_of_day() const { return static_cast<int>(hours_ - floor_div24(hours_) * 24); }

    std::int64_t hour_number() const { return hours_; }

    HourTimestamp plus_hours(std::int64_t n) const { return HourTimestamp(hours_ + n); }
    HourTimestamp successor() const { return plus_hours(1); }

    // Difference in whole hours (this - other).
    std::int64_t operator-(const HourTimestamp& other) const { return hours_ - other.hours_; }

    std::string to_string() const; // "YYYY-MM-DDTHH:00"

    auto operator<=>(const HourTimestamp&) const = default;

private:
    explicit HourTimestamp(std::int64_t hours) : hours_(hours) {}

    static std::int64_t floor_div24(std::int64_t h) {
        return (h >= 0) ? h / 24 : -((-h + 23) / 24);
    }

    std::int64_t hours_ = 0;
};

} // namespace crowdwarn

#endif
