#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace footcast {

/// Calendar date with day precision. Comparisons are lexicographic
/// (year, month, day).
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;
};

/// Parses "YYYY-MM-DD" (also accepts '/' separators). Throws DataError.
Date parse_date(std::string_view text);

std::string to_string(const Date& date);

}  // namespace footcast
