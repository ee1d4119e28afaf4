#pragma once

#include <chrono>
#include <compare>
#include <string>

namespace ontorec {

/// Calendar date, stored as days since the civil epoch.
class Date {
public:
    Date() = default;
    Date(int year, unsigned month, unsigned day);

    /// Parse an ISO-8601 calendar date (YYYY-MM-DD). Throws DataError on bad input.
    static Date parse(const std::string& iso);

    std::string to_string() const;
    int year() const;

    /// Whole days from other to this (positive when this is later).
    long days_since(const Date& other) const {
        return (days_ - other.days_).count();
    }

    Date plus_days(long n) const {
        Date d;
        d.days_ = days_ + std::chrono::days{n};
        return d;
    }

    auto operator<=>(const Date&) const = default;

private:
    std::chrono::sys_days days_{};
};

}  // namespace ontorec
