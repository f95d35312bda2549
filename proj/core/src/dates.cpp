#include "ratingsde/dates.hpp"

#include "ratingsde/errors.hpp"

#include <chrono>
#include <cstdio>

namespace ratingsde {

namespace {

std::chrono::year_month_day to_ymd(const Date& d)
{
    return std::chrono::year{d.year} / std::chrono::month{d.month} / std::chrono::day{d.day};
}

Date from_ymd(const std::chrono::year_month_day& ymd)
{
    return Date{int(ymd.year()), std::uint8_t(unsigned(ymd.month())), std::uint8_t(unsigned(ymd.day()))};
}

} // namespace

Date Date::from_string(const std::string& text)
{
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%d-%u-%u%c", &y, &m, &d, &tail) != 3 || text.size() != 10 ||
        text[4] != '-' || text[7] != '-') {
        throw io_error("invalid date '" + text + "', expected YYYY-MM-DD");
    }
    Date date{y, std::uint8_t(m), std::uint8_t(d)};
    if (!to_ymd(date).ok()) {
        throw io_error("impossible calendar date '" + text + "'");
    }
    return date;
}

std::string Date::to_string() const
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, unsigned(month), unsigned(day));
    return buf;
}

Date Date::add_months(int n) const
{
    auto ymd = to_ymd(*this) + std::chrono::months{n};
    if (!ymd.ok()) {
        ymd = ymd.year() / ymd.month() / std::chrono::last;
    }
    return from_ymd(ymd);
}

Date Date::next_day() const
{
    using namespace std::chrono;
    auto next = year_month_day{sys_days{to_ymd(*this)} + days{1}};
    return from_ymd(next);
}

int months_between(const Date& a, const Date& b)
{
    int whole = (b.year - a.year) * 12 + (int(b.month) - int(a.month));
    if (b.day < a.day) {
        --whole;
    }
    return whole;
}

} // namespace ratingsde
