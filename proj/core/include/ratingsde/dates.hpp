#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ratingsde {

/// ISO-8601 calendar date. Day granularity only.
struct Date {
    std::int32_t year = 1970;
    std::uint8_t month = 1; // 1..12
    std::uint8_t day = 1;   // 1..31, valid for the month

    auto operator<=>(const Date&) const = default;

    /// Parse "YYYY-MM-DD". Throws io_error on malformed or impossible dates.
    static Date from_string(const std::string& text);

    std::string to_string() const;

    /// Shift by whole calendar months; days past the end of the target month
    /// clamp to its last day (2011-01-31 + 1 month = 2011-02-28).
    Date add_months(int n) const;

    /// Next calendar day.
    Date next_day() const;
};

/// Whole months from a to b, counting only fully elapsed months.
int months_between(const Date& a, const Date& b);

} // namespace ratingsde
