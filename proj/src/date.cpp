#include "footcast/date.hpp"

#include <charconv>
#include <cstdio>

#include "footcast/errors.hpp"

namespace footcast {

namespace {

int parse_component(std::string_view text, std::size_t& pos, std::string_view full) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) {
    throw DataError("bad date: '" + std::string(full) + "'");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const bool leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
  return month == 2 && leap ? 29 : kDays[month - 1];
}

}  // namespace

Date parse_date(std::string_view text) {
  std::size_t pos = 0;
  Date date;
  date.year = parse_component(text, pos, text);
  for (int* part : {&date.month, &date.day}) {
    if (pos >= text.size() || (text[pos] != '-' && text[pos] != '/')) {
      throw DataError("bad date: '" + std::string(text) + "'");
    }
    ++pos;
    *part = parse_component(text, pos, text);
  }
  if (pos != text.size() || date.month < 1 || date.month > 12 || date.day < 1 ||
      date.day > days_in_month(date.year, date.month)) {
    throw DataError("bad date: '" + std::string(text) + "'");
  }
  return date;
}

std::string to_string(const Date& date) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", date.year, date.month,
                date.day);
  return buffer;
}

}  // namespace footcast
