#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace graphlens {

/// Closed vocabulary of property value types. Report leaves are keyed by
/// exactly these ten names; adding a tag is a format change.
enum class ValueTag : std::uint8_t {
  kBoolean = 0,
  kLong,
  kDouble,
  kString,
  kLocalDate,
  kLocalDateTime,
  kBooleanArray,
  kLongArray,
  kDoubleArray,
  kStringArray,
};

inline constexpr std::size_t kValueTagCount = 10;

/// Canonical name of a tag: "Boolean", "Long", ..., "StringArray".
/// Total and injective over the ten tags.
std::string_view value_tag_name(ValueTag tag);

/// Reverse of value_tag_name. Throws Error on unknown names.
ValueTag value_tag_from_name(std::string_view name);

bool is_value_tag_name(std::string_view name);

/// ISO-8601 calendar date, no timezone.
struct LocalDate {
  std::int32_t year = 1970;
  std::uint8_t month = 1;  // 1..12
  std::uint8_t day = 1;    // 1..days_in_month

  /// Validating factory; throws Error on out-of-range fields.
  static LocalDate of(std::int32_t year, unsigned month, unsigned day);

  /// Parses strict "YYYY-MM-DD". Throws Error.
  static LocalDate parse(std::string_view text);

  std::string to_string() const;

  auto operator<=>(const LocalDate&) const = default;
};

/// ISO-8601 calendar date-time, no timezone, nanosecond resolution.
struct LocalDateTime {
  LocalDate date;
  std::uint8_t hour = 0;
  std::uint8_t minute = 0;
  std::uint8_t second = 0;
  std::uint32_t nanos = 0;

  static LocalDateTime of(LocalDate date, unsigned hour, unsigned minute,
                          unsigned second, std::uint32_t nanos = 0);

  /// Parses "YYYY-MM-DDTHH:MM:SS" with optional ".f" fraction (1..9 digits).
  static LocalDateTime parse(std::string_view text);

  std::string to_string() const;

  auto operator<=>(const LocalDateTime&) const = default;
};

/// A schemaless property value: one of the ten tagged alternatives.
/// Arrays are homogeneous and keep their element tag even when empty.
class PropertyValue {
 public:
  using Storage =
      std::variant<bool, std::int64_t, double, std::string, LocalDate,
                   LocalDateTime, std::vector<bool>, std::vector<std::int64_t>,
                   std::vector<double>, std::vector<std::string>>;

  PropertyValue(bool v) : storage_(v) {}
  PropertyValue(std::int64_t v) : storage_(v) {}
  PropertyValue(int v) : storage_(static_cast<std::int64_t>(v)) {}
  PropertyValue(double v) : storage_(v) {}
  PropertyValue(const char* v) : storage_(std::string(v)) {}
  PropertyValue(std::string v) : storage_(std::move(v)) {}
  PropertyValue(LocalDate v) : storage_(v) {}
  PropertyValue(LocalDateTime v) : storage_(v) {}
  PropertyValue(std::vector<bool> v) : storage_(std::move(v)) {}
  PropertyValue(std::vector<std::int64_t> v) : storage_(std::move(v)) {}
  PropertyValue(std::vector<double> v) : storage_(std::move(v)) {}
  PropertyValue(std::vector<std::string> v) : storage_(std::move(v)) {}

  ValueTag tag() const { return static_cast<ValueTag>(storage_.index()); }

  const Storage& storage() const { return storage_; }

  template <class T>
  const T& as() const {
    return std::get<T>(storage_);
  }

  bool operator==(const PropertyValue&) const = default;

 private:
  static_assert(std::variant_size_v<Storage> == kValueTagCount);
  Storage storage_;
};

/// The report's leaf key for a value: value_tag_name of its tag.
std::string_view value_type_name(const PropertyValue& value);

}  // namespace graphlens
