#include "doctest.h"

#include <algorithm>

#include "json.hpp"
#include "stpaw/parser.hpp"
#include "stpaw/report.hpp"

using namespace stpaw;

namespace {

Project traced_project() {
  const std::string_view source = R"(project "Traced"
loss L1 "harm"
loss L2 "damage"
hazard H2 "late" leads_to [L2]
hazard H10 "hot" leads_to [L1, L2]
element CTRL role Controller in managed name "Controller"
element PROC role Process in managed name "Process"
link CA1 kind ControlAction from CTRL to PROC label "act"
uca U1 on CA1 phrase provided context "c" hazards [H10]
uca U2 on CA1 phrase not_provided context "c" hazards [H2, H10]
uca U9 on CA1 phrase too_early_or_too_late context "c" hazards [GHOST]
scenario SC1 for U1 factors [delayed_update] text "t"
scenario SC2 for U9 factors [delayed_update] text "t"
mitigation M1 "The controller shall act." addresses [U1, SC1]
mitigation M2 "The process shall cope." addresses [U2]
mitigation M3 "Nothing real." addresses [NOPE]
)";
  ParseResult result = parse(source, "traced.sas");
  REQUIRE(result.project.has_value());
  return *result.project;
}

std::string corpus_path(const std::string& file) {
  return std::string(STPAW_CORPUS_DIR) + "/" + file;
}

}  // namespace

TEST_CASE("trace matrix rows by hazard with sorted reachable sets") {
  const Project project = traced_project();
  const TraceMatrix matrix = trace_matrix(project);
  REQUIRE(matrix.rows.size() == 2);
  CHECK(matrix.rows[0].hazard == "H2");
  CHECK(matrix.rows[1].hazard == "H10");
  CHECK(matrix.rows[0].losses == std::vector<Identifier>{"L2"});
  CHECK(matrix.rows[0].ucas == std::vector<Identifier>{"U2"});
  CHECK(matrix.rows[0].scenarios.empty());
  CHECK(matrix.rows[0].mitigations == std::vector<Identifier>{"M2"});
  CHECK(matrix.rows[1].losses == std::vector<Identifier>{"L1", "L2"});
  CHECK(matrix.rows[1].ucas == std::vector<Identifier>{"U1", "U2"});
  CHECK(matrix.rows[1].scenarios == std::vector<Identifier>{"SC1"});
  CHECK(matrix.rows[1].mitigations == std::vector<Identifier>{"M1", "M2"});
}

TEST_CASE("trace matrix collects orphans") {
  const Project project = traced_project();
  const TraceMatrix matrix = trace_matrix(project);
  // U9 names only a hazard that does not exist, so it and its scenario
  // never reach a row; M3 addresses nothing resolvable
  CHECK(matrix.orphan_ucas == std::vector<Identifier>{"U9"});
  CHECK(matrix.orphan_scenarios == std::vector<Identifier>{"SC2"});
  CHECK(matrix.orphan_mitigations == std::vector<Identifier>{"M3"});
}

TEST_CASE("summary counts the encoded water heater study") {
  ParseResult result = parse_file(corpus_path("water_heater.sas"));
  REQUIRE(result.ok());
  const SummaryRow row = summary(*result.project);
  CHECK(row.name == "Water Heater");
  CHECK(row.type == AdaptationType::TII);
  CHECK(row.hazards == 1);
  CHECK(row.ucas == 8);
  CHECK(row.scenarios == 12);
  CHECK(row.mitigations == 15);
}

TEST_CASE("markdown export carries the summary row") {
  ParseResult result = parse_file(corpus_path("water_heater.sas"));
  REQUIRE(result.ok());
  const std::string md = export_project(*result.project, ExportFormat::Markdown);
  CHECK(md.find("| Water Heater | II | 1 | 8 | 12 | 15 |") !=
        std::string::npos);
  CHECK(md.find("## Traceability") != std::string::npos);
  // every analysis item is reachable in the corpus file
  CHECK(md.find("## Orphans") == std::string::npos);
}

TEST_CASE("markdown export lists orphans when present") {
  const std::string md = export_project(traced_project(), ExportFormat::Markdown);
  CHECK(md.find("## Orphans") != std::string::npos);
  CHECK(md.find("- uca U9\n") != std::string::npos);
  CHECK(md.find("- scenario SC2\n") != std::string::npos);
  CHECK(md.find("- mitigation M3\n") != std::string::npos);
}

TEST_CASE("csv export emits three sorted pair blocks") {
  const std::string csv = export_project(traced_project(), ExportFormat::Csv);
  const std::string expected =
      "hazard,uca\n"
      "GHOST,U9\n"
      "H2,U2\n"
      "H10,U1\n"
      "H10,U2\n"
      "\n"
      "uca,scenario\n"
      "U1,SC1\n"
      "U9,SC2\n"
      "\n"
      "item,mitigation\n"
      "NOPE,M3\n"
      "SC1,M1\n"
      "U1,M1\n"
      "U2,M2\n";
  CHECK(csv == expected);
}

TEST_CASE("csv fields with separators are quoted") {
  Project project;
  project.name = "Quoted";
  Hazard hazard;
  hazard.id = "H1";
  project.hazards.push_back(hazard);
  UnsafeControlAction uca;
  uca.id = "U,1\"x\"";
  uca.hazards = {"H1"};
  project.ucas.push_back(uca);
  const std::string csv = export_project(project, ExportFormat::Csv);
  CHECK(csv.find("H1,\"U,1\"\"x\"\"\"\n") != std::string::npos);
}

TEST_CASE("json export structure") {
  ParseResult result = parse_file(corpus_path("water_heater.sas"));
  REQUIRE(result.ok());
  const std::string text = export_project(*result.project, ExportFormat::Json);
  const nlohmann::json doc = nlohmann::json::parse(text);
  for (const char* key :
       {"meta", "losses", "hazards", "elements", "links", "adaptations",
        "ucas", "na_records", "scenarios", "mitigations", "obligations",
        "obligation_status", "findings", "summary"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["meta"]["project"] == "Water Heater");
  CHECK(doc["summary"]["type"] == "II");
  CHECK(doc["summary"]["ucas"] == 8);
  CHECK(doc["adaptations"][0]["computed_type"] == "II");
  CHECK(doc["obligations"].size() == 12);
  // a fully analyzed project exports with no findings
  CHECK(doc["findings"].empty());
  // sentences are rendered inline
  bool found = false;
  for (const auto& uca : doc["ucas"]) {
    if (uca["id"] == "U2") {
      const std::string sentence = uca["sentence"].get<std::string>();
      CHECK(sentence.find("Monitor provides too early or too late") == 0);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("exports are deterministic and order-insensitive") {
  ParseResult result = parse_file(corpus_path("water_heater.sas"));
  REQUIRE(result.ok());
  Project reordered = *result.project;
  std::reverse(reordered.losses.begin(), reordered.losses.end());
  std::reverse(reordered.hazards.begin(), reordered.hazards.end());
  std::reverse(reordered.elements.begin(), reordered.elements.end());
  std::reverse(reordered.links.begin(), reordered.links.end());
  std::reverse(reordered.ucas.begin(), reordered.ucas.end());
  std::reverse(reordered.na_records.begin(), reordered.na_records.end());
  std::reverse(reordered.scenarios.begin(), reordered.scenarios.end());
  std::reverse(reordered.mitigations.begin(), reordered.mitigations.end());
  std::reverse(reordered.obligation_responses.begin(),
               reordered.obligation_responses.end());
  for (const ExportFormat format :
       {ExportFormat::Json, ExportFormat::Markdown, ExportFormat::Csv}) {
    const std::string first = export_project(*result.project, format);
    const std::string second = export_project(*result.project, format);
    CHECK(first == second);
    CHECK(export_project(reordered, format) == first);
  }
}
