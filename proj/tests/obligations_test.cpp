#include "doctest.h"

#include <algorithm>

#include "stpaw/obligations.hpp"

using namespace stpaw;

namespace {

Element make_element(std::string id, ElementRole role) {
  Element element;
  element.id = id;
  element.role = role;
  element.boundary = boundary_for_role(role);
  element.name = std::move(id);
  return element;
}

// one each of Monitor/Analyzer/Planner/Executor/Knowledge/Probe/Effector
Project canonical_inventory() {
  Project project;
  project.name = "Inventory";
  project.elements.push_back(make_element("ANA", ElementRole::Analyzer));
  project.elements.push_back(make_element("EFF", ElementRole::Effector));
  project.elements.push_back(make_element("EXEC", ElementRole::Executor));
  project.elements.push_back(make_element("KNOW", ElementRole::Knowledge));
  project.elements.push_back(make_element("MON", ElementRole::Monitor));
  project.elements.push_back(make_element("PLAN", ElementRole::Planner));
  project.elements.push_back(make_element("PRB", ElementRole::Probe));
  return project;
}

bool has_obligation(const std::vector<Obligation>& obligations,
                    std::string_view id) {
  return std::any_of(obligations.begin(), obligations.end(),
                     [&](const Obligation& o) { return o.id == id; });
}

std::size_t count_stage(const std::vector<Obligation>& obligations,
                        ObligationStage stage) {
  return static_cast<std::size_t>(
      std::count_if(obligations.begin(), obligations.end(),
                    [&](const Obligation& o) {
                      return o.rule->stage == stage;
                    }));
}

ObligationResponse response(std::string obligation, ResponseStatus status,
                            std::vector<Identifier> by = {},
                            std::string reason = {}) {
  ObligationResponse r;
  r.obligation_id = std::move(obligation);
  r.status = status;
  r.by = std::move(by);
  r.reason = std::move(reason);
  return r;
}

}  // namespace

TEST_CASE("rule catalog shape") {
  const auto& rules = obligation_rules();
  CHECK(rules.size() == 13);
  // six analysis rules feed the UCA step, seven feed loss scenarios
  std::size_t uca_rules = 0;
  for (const auto& rule : rules) {
    if (rule.stage == ObligationStage::Uca) ++uca_rules;
  }
  CHECK(uca_rules == 6);
}

TEST_CASE("canonical inventory yields the frozen per-type counts") {
  const Project project = canonical_inventory();
  CHECK(generate(project, AdaptationType::T0).size() == 2);
  CHECK(generate(project, AdaptationType::TI).size() == 6);
  CHECK(generate(project, AdaptationType::TII).size() == 12);
  CHECK(generate(project, AdaptationType::TIIb).size() == 12);
  CHECK(generate(project, AdaptationType::TIII).size() == 17);
}

TEST_CASE("type III splits eleven uca and six scenario obligations") {
  const Project project = canonical_inventory();
  const auto obligations = generate(project, AdaptationType::TIII);
  CHECK(count_stage(obligations, ObligationStage::Uca) == 11);
  CHECK(count_stage(obligations, ObligationStage::Scenario) == 6);
}

TEST_CASE("obligation ids name rule and element") {
  const Project project = canonical_inventory();
  const auto t0 = generate(project, AdaptationType::T0);
  REQUIRE(t0.size() == 2);
  CHECK(has_obligation(t0, "OB-S1-EFF"));
  CHECK(has_obligation(t0, "OB-S2-PRB"));
  const auto ti = generate(project, AdaptationType::TI);
  CHECK(has_obligation(ti, "OB-S3-KNOW"));
  CHECK(has_obligation(ti, "OB-U1-ANA"));
  CHECK(has_obligation(ti, "OB-U1-PLAN"));
  CHECK(has_obligation(ti, "OB-U1-EXEC"));
}

TEST_CASE("design-time verification duty applies only to type I") {
  const Project project = canonical_inventory();
  CHECK(has_obligation(generate(project, AdaptationType::TI), "OB-S3-KNOW"));
  CHECK_FALSE(
      has_obligation(generate(project, AdaptationType::TII), "OB-S3-KNOW"));
  CHECK_FALSE(
      has_obligation(generate(project, AdaptationType::TIII), "OB-S3-KNOW"));
}

TEST_CASE("obligations scale with the element inventory") {
  Project project = canonical_inventory();
  project.elements.push_back(make_element("PRB2", ElementRole::Probe));
  // a second probe adds one instance each of the two probe duties
  CHECK(generate(project, AdaptationType::TII).size() == 14);

  Project with_effector = canonical_inventory();
  with_effector.elements.push_back(make_element("EFF2", ElementRole::Effector));
  // a second effector adds the interference and rollback duties
  CHECK(generate(with_effector, AdaptationType::TIII).size() == 19);
}

TEST_CASE("elements within a rule are ordered naturally") {
  Project project = canonical_inventory();
  project.elements.push_back(make_element("PRB10", ElementRole::Probe));
  project.elements.push_back(make_element("PRB2", ElementRole::Probe));
  const auto obligations = generate(project, AdaptationType::T0);
  std::vector<std::string> probe_ids;
  for (const auto& o : obligations) {
    if (o.rule->id == "OB-S2") probe_ids.push_back(o.element);
  }
  CHECK(probe_ids == std::vector<std::string>{"PRB", "PRB2", "PRB10"});
}

TEST_CASE("texts are instantiated with the element name") {
  Project project = canonical_inventory();
  for (Element& element : project.elements) {
    if (element.id == "PRB") element.name = "Network Probe";
  }
  const auto obligations = generate(project, AdaptationType::T0);
  const auto it = std::find_if(
      obligations.begin(), obligations.end(),
      [](const Obligation& o) { return o.id == "OB-S2-PRB"; });
  REQUIRE(it != obligations.end());
  CHECK(it->text.find("Network Probe") != std::string::npos);
  CHECK(it->text.find("{element}") == std::string::npos);
}

TEST_CASE("template variants strengthen with the type") {
  const Project project = canonical_inventory();
  const auto find_text = [](const std::vector<Obligation>& obligations,
                            std::string_view id) {
    const auto it =
        std::find_if(obligations.begin(), obligations.end(),
                     [&](const Obligation& o) { return o.id == id; });
    REQUIRE(it != obligations.end());
    return it->text;
  };
  const std::string uca_t2 =
      find_text(generate(project, AdaptationType::TII), "OB-U1-ANA");
  const std::string uca_t3 =
      find_text(generate(project, AdaptationType::TIII), "OB-U1-ANA");
  CHECK(uca_t2 != uca_t3);
  CHECK(uca_t3.find("run-time") != std::string::npos);

  const std::string eff_t0 =
      find_text(generate(project, AdaptationType::T0), "OB-S1-EFF");
  const std::string eff_t1 =
      find_text(generate(project, AdaptationType::TI), "OB-S1-EFF");
  CHECK(eff_t0 != eff_t1);
  CHECK(eff_t1.find("adaptation action") != std::string::npos);
}

TEST_CASE("coverage counts states and flags open obligations") {
  Project project = canonical_inventory();
  UnsafeControlAction uca;
  uca.id = "U1";
  project.ucas.push_back(uca);
  LossScenario scenario;
  scenario.id = "SC1";
  project.scenarios.push_back(scenario);
  project.obligation_responses.push_back(
      response("OB-S1-EFF", ResponseStatus::Addressed, {"SC1"}));
  project.obligation_responses.push_back(response(
      "OB-S2-PRB", ResponseStatus::NotApplicable, {}, "probe is passive"));

  const auto obligations = generate(project, AdaptationType::TI);
  const ObligationCoverage result = coverage(project, obligations);
  CHECK(result.addressed == 1);
  CHECK(result.not_applicable == 1);
  CHECK(result.open == 4);
  std::size_t open_warnings = 0;
  for (const Finding& finding : result.findings) {
    if (finding.rule == "O001") {
      CHECK(finding.severity == Severity::Warning);
      ++open_warnings;
    }
  }
  CHECK(open_warnings == 4);
}

TEST_CASE("O002 response to an obligation the project does not generate") {
  Project project = canonical_inventory();
  LossScenario scenario;
  scenario.id = "SC1";
  project.scenarios.push_back(scenario);
  // OB-S3 is a type I duty; this project is type II
  project.obligation_responses.push_back(
      response("OB-S3-KNOW", ResponseStatus::Addressed, {"SC1"}));
  const auto obligations = generate(project, AdaptationType::TII);
  const ObligationCoverage result = coverage(project, obligations);
  const auto it = std::find_if(
      result.findings.begin(), result.findings.end(),
      [](const Finding& f) { return f.rule == "O002"; });
  REQUIRE(it != result.findings.end());
  CHECK(it->severity == Severity::Error);
  CHECK(it->message.find("OB-S3-KNOW") != std::string::npos);
}

TEST_CASE("O003 stage mismatch still records the response") {
  Project project = canonical_inventory();
  UnsafeControlAction uca;
  uca.id = "U1";
  project.ucas.push_back(uca);
  // scenario-stage duty answered with a uca
  project.obligation_responses.push_back(
      response("OB-S1-EFF", ResponseStatus::Addressed, {"U1"}));
  const auto obligations = generate(project, AdaptationType::T0);
  const ObligationCoverage result = coverage(project, obligations);
  CHECK(result.addressed == 1);
  const auto it = std::find_if(
      result.findings.begin(), result.findings.end(),
      [](const Finding& f) { return f.rule == "O003"; });
  REQUIRE(it != result.findings.end());
  CHECK(it->severity == Severity::Error);
}

TEST_CASE("O004 duplicate responses") {
  Project project = canonical_inventory();
  LossScenario scenario;
  scenario.id = "SC1";
  project.scenarios.push_back(scenario);
  project.obligation_responses.push_back(
      response("OB-S1-EFF", ResponseStatus::Addressed, {"SC1"}));
  project.obligation_responses.push_back(response(
      "OB-S1-EFF", ResponseStatus::NotApplicable, {}, "already handled"));
  const auto obligations = generate(project, AdaptationType::T0);
  const ObligationCoverage result = coverage(project, obligations);
  const auto duplicates = std::count_if(
      result.findings.begin(), result.findings.end(),
      [](const Finding& f) { return f.rule == "O004"; });
  CHECK(duplicates == 1);
  // the first response wins
  CHECK(result.addressed == 1);
  CHECK(result.not_applicable == 0);
}
