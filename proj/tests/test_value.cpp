#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "graphlens/error.hpp"
#include "graphlens/value.hpp"

using namespace graphlens;

TEST_CASE("tag names are total and injective over the ten tags") {
  std::set<std::string> names;
  for (std::size_t i = 0; i < kValueTagCount; ++i) {
    const auto tag = static_cast<ValueTag>(i);
    const std::string name{value_tag_name(tag)};
    CHECK(!name.empty());
    CHECK(names.insert(name).second);
    CHECK(value_tag_from_name(name) == tag);
    CHECK(is_value_tag_name(name));
  }
  CHECK(names.size() == 10);
  CHECK_THROWS_AS(value_tag_from_name("Integer"), Error);
  CHECK(!is_value_tag_name("Int"));
  CHECK(!is_value_tag_name("long"));
}

TEST_CASE("value_type_name returns the leaf key for each payload") {
  CHECK(value_type_name(PropertyValue(std::int64_t{42})) == "Long");
  CHECK(value_type_name(PropertyValue(LocalDate::of(2021, 2, 22))) ==
        "LocalDate");
  CHECK(value_type_name(PropertyValue(std::vector<std::int64_t>{})) ==
        "LongArray");
  CHECK(value_type_name(PropertyValue(true)) == "Boolean");
  CHECK(value_type_name(PropertyValue(1.5)) == "Double");
  CHECK(value_type_name(PropertyValue("a")) == "String");
  CHECK(value_type_name(PropertyValue(
            LocalDateTime::of(LocalDate::of(2020, 1, 1), 10, 30, 0))) ==
        "LocalDateTime");
  CHECK(value_type_name(PropertyValue(std::vector<bool>{true})) ==
        "BooleanArray");
  CHECK(value_type_name(PropertyValue(std::vector<double>{1.0})) ==
        "DoubleArray");
  CHECK(value_type_name(PropertyValue(std::vector<std::string>{"x"})) ==
        "StringArray");
}

TEST_CASE("empty arrays keep their element tag") {
  CHECK(PropertyValue(std::vector<bool>{}).tag() == ValueTag::kBooleanArray);
  CHECK(PropertyValue(std::vector<std::int64_t>{}).tag() ==
        ValueTag::kLongArray);
  CHECK(PropertyValue(std::vector<double>{}).tag() == ValueTag::kDoubleArray);
  CHECK(PropertyValue(std::vector<std::string>{}).tag() ==
        ValueTag::kStringArray);
}

TEST_CASE("LocalDate parse/format round trip") {
  const LocalDate d = LocalDate::parse("2021-02-22");
  CHECK(d.year == 2021);
  CHECK(d.month == 2);
  CHECK(d.day == 22);
  CHECK(d.to_string() == "2021-02-22");
  CHECK(LocalDate::parse("2020-02-29").to_string() == "2020-02-29");  // leap
  CHECK(LocalDate::parse("0001-01-01").to_string() == "0001-01-01");
}

TEST_CASE("LocalDate rejects malformed and impossible dates") {
  CHECK_THROWS_AS(LocalDate::parse("2021-02-29"), Error);  // not a leap year
  CHECK_THROWS_AS(LocalDate::parse("2100-02-29"), Error);  // century rule
  CHECK_THROWS_AS(LocalDate::parse("2021-13-01"), Error);
  CHECK_THROWS_AS(LocalDate::parse("2021-00-10"), Error);
  CHECK_THROWS_AS(LocalDate::parse("2021-1-1"), Error);
  CHECK_THROWS_AS(LocalDate::parse("2021/01/01"), Error);
  CHECK_THROWS_AS(LocalDate::parse("21-01-01"), Error);
  CHECK_THROWS_AS(LocalDate::parse(""), Error);
}

TEST_CASE("LocalDateTime parse/format round trip") {
  const LocalDateTime t = LocalDateTime::parse("2021-02-22T10:30:05");
  CHECK(t.date == LocalDate::of(2021, 2, 22));
  CHECK(t.hour == 10);
  CHECK(t.minute == 30);
  CHECK(t.second == 5);
  CHECK(t.nanos == 0);
  CHECK(t.to_string() == "2021-02-22T10:30:05");

  const LocalDateTime frac = LocalDateTime::parse("2021-02-22T10:30:05.123");
  CHECK(frac.nanos == 123'000'000);
  CHECK(frac.to_string() == "2021-02-22T10:30:05.123");
  CHECK(LocalDateTime::parse("2000-01-01T00:00:00.000000001").nanos == 1);
}

TEST_CASE("LocalDateTime rejects malformed input") {
  CHECK_THROWS_AS(LocalDateTime::parse("2021-02-22 10:30:05"), Error);
  CHECK_THROWS_AS(LocalDateTime::parse("2021-02-22T24:00:00"), Error);
  CHECK_THROWS_AS(LocalDateTime::parse("2021-02-22T10:61:00"), Error);
  CHECK_THROWS_AS(LocalDateTime::parse("2021-02-22T10:30"), Error);
  CHECK_THROWS_AS(LocalDateTime::parse("2021-02-22T10:30:05."), Error);
  CHECK_THROWS_AS(LocalDateTime::parse("2021-02-22T10:30:05.1234567890"),
                  Error);
}

TEST_CASE("PropertyValue equality follows payloads") {
  CHECK(PropertyValue(std::int64_t{1}) == PropertyValue(std::int64_t{1}));
  CHECK(PropertyValue(std::int64_t{1}) != PropertyValue(1.0));  // Long vs Double
  CHECK(PropertyValue("a") != PropertyValue(std::vector<std::string>{"a"}));
}
