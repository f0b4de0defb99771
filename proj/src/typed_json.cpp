#include <charconv>
#include <string>

#include "graphlens/error.hpp"
#include "graphlens/ingest.hpp"

namespace graphlens {

namespace {

using nlohmann::json;

std::int64_t parse_long(const json& v) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    std::int64_t out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec == std::errc() && ptr == last) return out;
  }
  throw Error("expected a Long (decimal string or integer), got " + v.dump());
}

bool parse_boolean(const json& v) {
  if (!v.is_boolean())
    throw Error("expected a Boolean (true/false), got " + v.dump());
  return v.get<bool>();
}

double parse_double(const json& v) {
  if (!v.is_number())
    throw Error("expected a Double (JSON number), got " + v.dump());
  return v.get<double>();
}

std::string parse_string(const json& v) {
  if (!v.is_string())
    throw Error("expected a String (JSON string), got " + v.dump());
  return v.get<std::string>();
}

template <class Element, class ParseElement>
std::vector<Element> parse_array(const json& v, ParseElement&& parse_element) {
  if (!v.is_array())
    throw Error("expected an array, got " + v.dump());
  std::vector<Element> out;
  out.reserve(v.size());
  for (const json& element : v) out.push_back(parse_element(element));
  return out;
}

}  // namespace

json encode_value(const PropertyValue& value) {
  json encoded;
  encoded["t"] = std::string(value_tag_name(value.tag()));
  switch (value.tag()) {
    case ValueTag::kBoolean:
      encoded["v"] = value.as<bool>();
      break;
    case ValueTag::kLong:
      encoded["v"] = std::to_string(value.as<std::int64_t>());
      break;
    case ValueTag::kDouble:
      encoded["v"] = value.as<double>();
      break;
    case ValueTag::kString:
      encoded["v"] = value.as<std::string>();
      break;
    case ValueTag::kLocalDate:
      encoded["v"] = value.as<LocalDate>().to_string();
      break;
    case ValueTag::kLocalDateTime:
      encoded["v"] = value.as<LocalDateTime>().to_string();
      break;
    case ValueTag::kBooleanArray:
      encoded["v"] = value.as<std::vector<bool>>();
      break;
    case ValueTag::kLongArray: {
      json elements = json::array();
      for (std::int64_t element : value.as<std::vector<std::int64_t>>())
        elements.push_back(std::to_string(element));
      encoded["v"] = std::move(elements);
      break;
    }
    case ValueTag::kDoubleArray:
      encoded["v"] = value.as<std::vector<double>>();
      break;
    case ValueTag::kStringArray:
      encoded["v"] = value.as<std::vector<std::string>>();
      break;
  }
  return encoded;
}

PropertyValue decode_value(const json& encoded) {
  if (!encoded.is_object() || !encoded.contains("t") || !encoded.contains("v"))
    throw Error("typed value must be an object {\"t\": tag, \"v\": value}, got " +
                encoded.dump());
  const json& t = encoded.at("t");
  if (!t.is_string())
    throw Error("type tag must be a string, got " + t.dump());
  const ValueTag tag = value_tag_from_name(t.get_ref<const std::string&>());
  const json& v = encoded.at("v");
  switch (tag) {
    case ValueTag::kBoolean:
      return PropertyValue(parse_boolean(v));
    case ValueTag::kLong:
      return PropertyValue(parse_long(v));
    case ValueTag::kDouble:
      return PropertyValue(parse_double(v));
    case ValueTag::kString:
      return PropertyValue(parse_string(v));
    case ValueTag::kLocalDate:
      return PropertyValue(LocalDate::parse(parse_string(v)));
    case ValueTag::kLocalDateTime:
      return PropertyValue(LocalDateTime::parse(parse_string(v)));
    case ValueTag::kBooleanArray:
      return PropertyValue(parse_array<bool>(v, parse_boolean));
    case ValueTag::kLongArray:
      return PropertyValue(parse_array<std::int64_t>(v, parse_long));
    case ValueTag::kDoubleArray:
      return PropertyValue(parse_array<double>(v, parse_double));
    case ValueTag::kStringArray:
      return PropertyValue(parse_array<std::string>(v, parse_string));
  }
  throw Error("unreachable: bad tag");
}

}  // namespace graphlens
