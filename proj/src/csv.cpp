#include <charconv>
#include <fstream>
#include <string>
#include <unordered_map>

#include "graphlens/error.hpp"
#include "graphlens/ingest.hpp"

namespace graphlens {

namespace {

[[noreturn]] void fail_row(const std::filesystem::path& path,
                           std::uint64_t line, const std::string& message) {
  throw Error(path.string() + " line " + std::to_string(line) + ": " + message);
}

// One physical line, comma-separated, double-quote quoting with "" as the
// escaped quote. Embedded newlines are not supported.
std::vector<std::string> split_csv_line(const std::filesystem::path& path,
                                        std::uint64_t line,
                                        const std::string& text) {
  std::vector<std::string> fields;
  std::string field;
  std::size_t i = 0;
  const std::size_t n = text.size();
  for (;;) {
    field.clear();
    if (i < n && text[i] == '"') {
      ++i;
      for (;;) {
        if (i >= n) fail_row(path, line, "unterminated quoted field");
        if (text[i] == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            ++i;
            break;
          }
        } else {
          field += text[i++];
        }
      }
      if (i < n && text[i] != ',')
        fail_row(path, line, "unexpected character after closing quote");
    } else {
      while (i < n && text[i] != ',') field += text[i++];
    }
    fields.push_back(field);
    if (i >= n) break;
    ++i;  // skip comma
  }
  return fields;
}

struct Column {
  enum class Kind { kId, kLabel, kStartId, kEndId, kType, kProperty };
  Kind kind = Kind::kProperty;
  std::string name;  // property name when kind == kProperty
  ValueTag tag = ValueTag::kString;
};

std::vector<Column> parse_header(const std::filesystem::path& path,
                                 const std::string& text, bool relationships) {
  std::vector<Column> columns;
  bool has_id = false, has_label = false, has_start = false, has_end = false,
       has_type = false;
  for (const std::string& raw : split_csv_line(path, 1, text)) {
    Column column;
    if (raw == ":ID") {
      if (has_id) fail_row(path, 1, "duplicate :ID column");
      has_id = true;
      column.kind = Column::Kind::kId;
    } else if (raw == ":LABEL") {
      if (has_label) fail_row(path, 1, "duplicate :LABEL column");
      has_label = true;
      column.kind = Column::Kind::kLabel;
    } else if (raw == ":START_ID") {
      if (has_start) fail_row(path, 1, "duplicate :START_ID column");
      has_start = true;
      column.kind = Column::Kind::kStartId;
    } else if (raw == ":END_ID") {
      if (has_end) fail_row(path, 1, "duplicate :END_ID column");
      has_end = true;
      column.kind = Column::Kind::kEndId;
    } else if (raw == ":TYPE") {
      if (has_type) fail_row(path, 1, "duplicate :TYPE column");
      has_type = true;
      column.kind = Column::Kind::kType;
    } else {
      const std::size_t colon = raw.rfind(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == raw.size())
        fail_row(path, 1,
                 "column \"" + raw + "\" must be \"name:tag\" or a reserved column");
      column.kind = Column::Kind::kProperty;
      column.name = raw.substr(0, colon);
      column.tag = value_tag_from_name(raw.substr(colon + 1));
    }
    columns.push_back(std::move(column));
  }
  if (relationships) {
    if (!has_start) fail_row(path, 1, "missing :START_ID column");
    if (!has_end) fail_row(path, 1, "missing :END_ID column");
    if (!has_type) fail_row(path, 1, "missing :TYPE column");
    if (has_id || has_label)
      fail_row(path, 1, ":ID/:LABEL are node columns");
  } else {
    if (!has_id) fail_row(path, 1, "missing :ID column");
    if (has_start || has_end || has_type)
      fail_row(path, 1, ":START_ID/:END_ID/:TYPE are relationship columns");
  }
  return columns;
}

std::vector<std::string> split_on_semicolons(const std::string& cell) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t sep = cell.find(';', start);
    if (sep == std::string::npos) {
      parts.push_back(cell.substr(start));
      return parts;
    }
    parts.push_back(cell.substr(start, sep - start));
    start = sep + 1;
  }
}

std::int64_t parse_long_cell(const std::string& cell) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw Error("cannot parse \"" + cell + "\" as Long");
  return out;
}

double parse_double_cell(const std::string& cell) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw Error("cannot parse \"" + cell + "\" as Double");
  return out;
}

bool parse_boolean_cell(const std::string& cell) {
  if (cell == "true") return true;
  if (cell == "false") return false;
  throw Error("cannot parse \"" + cell + "\" as Boolean (expected true/false)");
}

template <class Element, class ParseElement>
std::vector<Element> parse_array_cell(const std::string& cell,
                                      ParseElement&& parse_element) {
  std::vector<Element> out;
  for (const std::string& part : split_on_semicolons(cell))
    out.push_back(parse_element(part));
  return out;
}

PropertyValue parse_cell(ValueTag tag, const std::string& cell) {
  switch (tag) {
    case ValueTag::kBoolean:
      return PropertyValue(parse_boolean_cell(cell));
    case ValueTag::kLong:
      return PropertyValue(parse_long_cell(cell));
    case ValueTag::kDouble:
      return PropertyValue(parse_double_cell(cell));
    case ValueTag::kString:
      return PropertyValue(cell);
    case ValueTag::kLocalDate:
      return PropertyValue(LocalDate::parse(cell));
    case ValueTag::kLocalDateTime:
      return PropertyValue(LocalDateTime::parse(cell));
    case ValueTag::kBooleanArray:
      return PropertyValue(parse_array_cell<bool>(cell, parse_boolean_cell));
    case ValueTag::kLongArray:
      return PropertyValue(
          parse_array_cell<std::int64_t>(cell, parse_long_cell));
    case ValueTag::kDoubleArray:
      return PropertyValue(parse_array_cell<double>(cell, parse_double_cell));
    case ValueTag::kStringArray:
      return PropertyValue(parse_array_cell<std::string>(
          cell, [](const std::string& part) { return part; }));
  }
  throw Error("unreachable: bad tag");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

Graph load_csv(const std::vector<std::filesystem::path>& node_files,
               const std::vector<std::filesystem::path>& rel_files) {
  Graph graph;
  std::unordered_map<std::string, NodeId> external_ids;

  for (const auto& path : node_files) {
    std::ifstream in = open_input(path);
    std::string text;
    if (!std::getline(in, text)) throw Error(path.string() + ": missing header");
    const std::vector<Column> columns = parse_header(path, text, false);
    std::uint64_t line = 1;
    while (std::getline(in, text)) {
      ++line;
      const std::vector<std::string> fields = split_csv_line(path, line, text);
      if (fields.size() != columns.size())
        fail_row(path, line,
                 "expected " + std::to_string(columns.size()) + " fields, got " +
                     std::to_string(fields.size()));
      std::string external_id;
      std::vector<std::string> labels;
      PropertyMap properties;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const Column& column = columns[c];
        const std::string& cell = fields[c];
        switch (column.kind) {
          case Column::Kind::kId:
            if (cell.empty()) fail_row(path, line, "empty :ID cell");
            external_id = cell;
            break;
          case Column::Kind::kLabel:
            if (!cell.empty())
              for (auto& label : split_on_semicolons(cell))
                labels.push_back(std::move(label));
            break;
          case Column::Kind::kProperty:
            if (!cell.empty()) {
              try {
                properties.emplace_back(column.name,
                                        parse_cell(column.tag, cell));
              } catch (const Error& e) {
                fail_row(path, line,
                         "column \"" + column.name + "\": " + e.what());
              }
            }
            break;
          default:
            break;
        }
      }
      if (external_ids.contains(external_id))
        fail_row(path, line, "duplicate node id \"" + external_id + "\"");
      try {
        NodeId id = graph.add_node(std::move(labels), std::move(properties));
        external_ids.emplace(std::move(external_id), id);
      } catch (const Error& e) {
        fail_row(path, line, e.what());
      }
    }
  }

  for (const auto& path : rel_files) {
    std::ifstream in = open_input(path);
    std::string text;
    if (!std::getline(in, text)) throw Error(path.string() + ": missing header");
    const std::vector<Column> columns = parse_header(path, text, true);
    std::uint64_t line = 1;
    while (std::getline(in, text)) {
      ++line;
      const std::vector<std::string> fields = split_csv_line(path, line, text);
      if (fields.size() != columns.size())
        fail_row(path, line,
                 "expected " + std::to_string(columns.size()) + " fields, got " +
                     std::to_string(fields.size()));
      std::string start_id, end_id, type;
      PropertyMap properties;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const Column& column = columns[c];
        const std::string& cell = fields[c];
        switch (column.kind) {
          case Column::Kind::kStartId:
            if (cell.empty()) fail_row(path, line, "empty :START_ID cell");
            start_id = cell;
            break;
          case Column::Kind::kEndId:
            if (cell.empty()) fail_row(path, line, "empty :END_ID cell");
            end_id = cell;
            break;
          case Column::Kind::kType:
            if (cell.empty()) fail_row(path, line, "empty :TYPE cell");
            type = cell;
            break;
          case Column::Kind::kProperty:
            if (!cell.empty()) {
              try {
                properties.emplace_back(column.name,
                                        parse_cell(column.tag, cell));
              } catch (const Error& e) {
                fail_row(path, line,
                         "column \"" + column.name + "\": " + e.what());
              }
            }
            break;
          default:
            break;
        }
      }
      auto start_it = external_ids.find(start_id);
      if (start_it == external_ids.end())
        fail_row(path, line, "unknown start node id \"" + start_id + "\"");
      auto end_it = external_ids.find(end_id);
      if (end_it == external_ids.end())
        fail_row(path, line, "unknown end node id \"" + end_id + "\"");
      try {
        graph.add_relationship(std::move(type), start_it->second,
                               end_it->second, std::move(properties));
      } catch (const Error& e) {
        fail_row(path, line, e.what());
      }
    }
  }

  return graph;
}

}  // namespace graphlens
