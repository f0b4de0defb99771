#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "graphlens/error.hpp"
#include "graphlens/report.hpp"

using namespace graphlens;

namespace {

// Small random reports for property-style checks.
TypeReport random_report(std::mt19937_64& rng) {
  static const char* groups[] = {"A", "B", "PHONE", "_NO_LABEL"};
  static const char* properties[] = {"p", "q", "phone", "name"};
  TypeReport report;
  const int entries = static_cast<int>(rng() % 12);
  for (int i = 0; i < entries; ++i) {
    report.add(groups[rng() % 4], properties[rng() % 4],
               static_cast<ValueTag>(rng() % kValueTagCount), 1 + rng() % 5);
  }
  return report;
}

}  // namespace

TEST_CASE("empty report serializes to {} with a trailing newline") {
  CHECK(to_json(TypeReport{}) == "{}\n");
}

TEST_CASE("serialization is canonical: sorted keys, 2-space indent") {
  TypeReport report;
  report.add("PERSON", "person_id", ValueTag::kLong, 11967747);
  report.add("PERSON", "name", ValueTag::kString, 11962203);
  const std::string json = to_json(report);
  CHECK(json ==
        "{\n"
        "  \"PERSON\": {\n"
        "    \"name\": {\n"
        "      \"String\": 11962203\n"
        "    },\n"
        "    \"person_id\": {\n"
        "      \"Long\": 11967747\n"
        "    }\n"
        "  }\n"
        "}\n");
}

TEST_CASE("add is a no-op for n = 0 and accumulates otherwise") {
  TypeReport report;
  report.add("A", "p", ValueTag::kLong, 0);
  CHECK(report.empty());
  report.add("A", "p", ValueTag::kLong);
  report.add("A", "p", ValueTag::kLong, 2);
  CHECK(report.groups().at("A").at("p").at("Long") == 3);
}

TEST_CASE("serialize then parse reconstructs the report exactly") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const TypeReport report = random_report(rng);
    CHECK(report_from_json(to_json(report)) == report);
  }
}

TEST_CASE("parse rejects malformed reports") {
  CHECK_THROWS_AS(report_from_json("not json"), Error);
  CHECK_THROWS_AS(report_from_json("[]"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"A": {"p": {"Int": 1}}})"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"A": {"p": {"Long": 0}}})"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"A": {"p": {"Long": -3}}})"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"A": {"p": {"Long": 1.5}}})"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"A": {}})"), Error);
  CHECK_THROWS_AS(report_from_json(R"({"A": {"p": {}}})"), Error);
}

TEST_CASE("merge is a pointwise sum") {
  TypeReport a;
  a.add("A", "p", ValueTag::kLong, 2);
  TypeReport b;
  b.add("A", "p", ValueTag::kLong, 3);
  b.add("B", "q", ValueTag::kString, 1);
  a.merge(b);
  CHECK(a.groups().at("A").at("p").at("Long") == 5);
  CHECK(a.groups().at("B").at("q").at("String") == 1);
}

TEST_CASE("no inconsistencies in an empty report") {
  CHECK(find_inconsistencies(TypeReport{}).empty());
}

TEST_CASE("a split phone property is reported with majority and minority") {
  TypeReport report;
  report.add("PHONE", "phone", ValueTag::kString, 10);
  report.add("PHONE", "phone", ValueTag::kLong, 3);
  const auto findings = find_inconsistencies(report);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].group == "PHONE");
  CHECK(findings[0].property == "phone");
  CHECK(findings[0].majority_type == "String");
  CHECK(findings[0].minority_total == 3);
  CHECK(findings[0].type_counts.size() == 2);
}

TEST_CASE("majority ties break lexicographically") {
  TypeReport report;
  report.add("A", "p", ValueTag::kLong, 5);
  report.add("A", "p", ValueTag::kString, 5);
  const auto findings = find_inconsistencies(report);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].majority_type == "Long");
  CHECK(findings[0].minority_total == 5);
}

TEST_CASE("findings are sorted by (group, property)") {
  TypeReport report;
  report.add("Z", "a", ValueTag::kLong, 1);
  report.add("Z", "a", ValueTag::kString, 1);
  report.add("A", "z", ValueTag::kLong, 1);
  report.add("A", "z", ValueTag::kDouble, 1);
  report.add("A", "b", ValueTag::kLong, 1);
  report.add("A", "b", ValueTag::kBoolean, 1);
  const auto findings = find_inconsistencies(report);
  REQUIRE(findings.size() == 3);
  CHECK(findings[0].group == "A");
  CHECK(findings[0].property == "b");
  CHECK(findings[1].group == "A");
  CHECK(findings[1].property == "z");
  CHECK(findings[2].group == "Z");
}

TEST_CASE("a pair is reported iff it has two or more type keys") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const TypeReport report = random_report(rng);
    const auto findings = find_inconsistencies(report);
    std::size_t expected = 0;
    for (const auto& [group, properties] : report.groups()) {
      for (const auto& [property, types] : properties) {
        if (types.size() >= 2) {
          ++expected;
          bool found = false;
          for (const auto& finding : findings) {
            if (finding.group == group && finding.property == property) {
              found = true;
              // Majority/minority recomputed by brute force.
              std::uint64_t best = 0, total = 0;
              for (const auto& [type, count] : types) {
                total += count;
                best = std::max(best, count);
              }
              CHECK(types.at(finding.majority_type) == best);
              CHECK(finding.minority_total == total - best);
              CHECK(finding.minority_total >= 1);
            }
          }
          CHECK(found);
        }
      }
    }
    CHECK(findings.size() == expected);
  }
}

TEST_CASE("summarize totals") {
  CHECK(summarize(TypeReport{}) == ReportSummary{0, 0, 0, 0});

  TypeReport figure;  // PROJECT with 5 properties, PERSON with 2
  figure.add("PROJECT", "project_start", ValueTag::kLocalDate, 444589);
  figure.add("PROJECT", "total_cost", ValueTag::kLong, 423036);
  figure.add("PROJECT", "project_end", ValueTag::kLocalDate, 444328);
  figure.add("PROJECT", "title", ValueTag::kString, 472445);
  figure.add("PROJECT", "project_num", ValueTag::kString, 488501);
  figure.add("PERSON", "name", ValueTag::kString, 11962203);
  figure.add("PERSON", "person_id", ValueTag::kLong, 11967747);
  const ReportSummary summary = summarize(figure);
  CHECK(summary.groups == 2);
  CHECK(summary.properties == 7);
  CHECK(summary.inconsistent_pairs == 0);

  TypeReport small;
  small.add("A", "p", ValueTag::kLong, 2);
  small.add("A", "p", ValueTag::kString, 3);
  CHECK(summarize(small).instances == 5);
  CHECK(summarize(small).inconsistent_pairs == 1);
}

TEST_CASE("group and property keys are JSON-escaped") {
  TypeReport report;
  report.add("A\"B", "p\\q", ValueTag::kLong, 1);
  const std::string json = to_json(report);
  CHECK(json.find("\"A\\\"B\"") != std::string::npos);
  CHECK(json.find("\"p\\\\q\"") != std::string::npos);
  CHECK(report_from_json(json) == report);
}
