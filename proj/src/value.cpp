#include "graphlens/value.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "graphlens/error.hpp"

namespace graphlens {

namespace {

constexpr std::array<std::string_view, kValueTagCount> kTagNames = {
    "Boolean",      "Long",          "Double",    "String",
    "LocalDate",    "LocalDateTime", "BooleanArray", "LongArray",
    "DoubleArray",  "StringArray",
};

bool is_leap_year(std::int32_t year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

unsigned days_in_month(std::int32_t year, unsigned month) {
  static constexpr unsigned kDays[12] = {31, 28, 31, 30, 31, 30,
                                         31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[month - 1];
}

// Parses exactly `width` decimal digits from text at `pos`.
unsigned parse_digits(std::string_view text, std::size_t pos, std::size_t width,
                      std::string_view what) {
  if (pos + width > text.size())
    throw Error("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  unsigned out = 0;
  for (std::size_t i = 0; i < width; ++i) {
    char c = text[pos + i];
    if (c < '0' || c > '9')
      throw Error("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    out = out * 10 + static_cast<unsigned>(c - '0');
  }
  return out;
}

void expect_char(std::string_view text, std::size_t pos, char c,
                 std::string_view what) {
  if (pos >= text.size() || text[pos] != c)
    throw Error("invalid " + std::string(what) + ": '" + std::string(text) + "'");
}

}  // namespace

std::string_view value_tag_name(ValueTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

ValueTag value_tag_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<ValueTag>(i);
  }
  throw Error("unknown type tag '" + std::string(name) + "'");
}

bool is_value_tag_name(std::string_view name) {
  for (const auto& candidate : kTagNames) {
    if (candidate == name) return true;
  }
  return false;
}

LocalDate LocalDate::of(std::int32_t year, unsigned month, unsigned day) {
  if (year < 0 || year > 9999)
    throw Error("date year out of range: " + std::to_string(year));
  if (month < 1 || month > 12)
    throw Error("date month out of range: " + std::to_string(month));
  if (day < 1 || day > days_in_month(year, month))
    throw Error("date day out of range: " + std::to_string(day));
  return LocalDate{year, static_cast<std::uint8_t>(month),
                   static_cast<std::uint8_t>(day)};
}

LocalDate LocalDate::parse(std::string_view text) {
  if (text.size() != 10)
    throw Error("invalid LocalDate: '" + std::string(text) + "'");
  unsigned year = parse_digits(text, 0, 4, "LocalDate");
  expect_char(text, 4, '-', "LocalDate");
  unsigned month = parse_digits(text, 5, 2, "LocalDate");
  expect_char(text, 7, '-', "LocalDate");
  unsigned day = parse_digits(text, 8, 2, "LocalDate");
  return of(static_cast<std::int32_t>(year), month, day);
}

std::string LocalDate::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year,
                static_cast<unsigned>(month), static_cast<unsigned>(day));
  return buf;
}

LocalDateTime LocalDateTime::of(LocalDate date, unsigned hour, unsigned minute,
                                unsigned second, std::uint32_t nanos) {
  if (hour > 23) throw Error("time hour out of range: " + std::to_string(hour));
  if (minute > 59)
    throw Error("time minute out of range: " + std::to_string(minute));
  if (second > 59)
    throw Error("time second out of range: " + std::to_string(second));
  if (nanos > 999'999'999)
    throw Error("time nanos out of range: " + std::to_string(nanos));
  return LocalDateTime{date, static_cast<std::uint8_t>(hour),
                       static_cast<std::uint8_t>(minute),
                       static_cast<std::uint8_t>(second), nanos};
}

LocalDateTime LocalDateTime::parse(std::string_view text) {
  if (text.size() < 19)
    throw Error("invalid LocalDateTime: '" + std::string(text) + "'");
  LocalDate date = LocalDate::parse(text.substr(0, 10));
  expect_char(text, 10, 'T', "LocalDateTime");
  unsigned hour = parse_digits(text, 11, 2, "LocalDateTime");
  expect_char(text, 13, ':', "LocalDateTime");
  unsigned minute = parse_digits(text, 14, 2, "LocalDateTime");
  expect_char(text, 16, ':', "LocalDateTime");
  unsigned second = parse_digits(text, 17, 2, "LocalDateTime");
  std::uint32_t nanos = 0;
  if (text.size() > 19) {
    expect_char(text, 19, '.', "LocalDateTime");
    std::size_t digits = text.size() - 20;
    if (digits < 1 || digits > 9)
      throw Error("invalid LocalDateTime: '" + std::string(text) + "'");
    nanos = parse_digits(text, 20, digits, "LocalDateTime");
    for (std::size_t i = digits; i < 9; ++i) nanos *= 10;
  }
  return of(date, hour, minute, second, nanos);
}

std::string LocalDateTime::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02u:%02u:%02u", date.year,
                static_cast<unsigned>(date.month),
                static_cast<unsigned>(date.day), static_cast<unsigned>(hour),
                static_cast<unsigned>(minute), static_cast<unsigned>(second));
  std::string out(buf);
  if (nanos != 0) {
    char frac[16];
    std::snprintf(frac, sizeof(frac), "%09u", nanos);
    std::string_view fv(frac, 9);
    while (fv.size() > 1 && fv.back() == '0') fv.remove_suffix(1);
    out += '.';
    out += fv;
  }
  return out;
}

std::string_view value_type_name(const PropertyValue& value) {
  return value_tag_name(value.tag());
}

}  // namespace graphlens
