#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stpaw/model.hpp"

using namespace stpaw;

TEST_CASE("identifier syntax") {
  CHECK(is_valid_identifier("H1"));
  CHECK(is_valid_identifier("OB-U1-ANA"));
  CHECK(is_valid_identifier("a_b-c2"));
  CHECK_FALSE(is_valid_identifier(""));
  CHECK_FALSE(is_valid_identifier("a.b"));
  CHECK_FALSE(is_valid_identifier("1H"));
  CHECK_FALSE(is_valid_identifier("-x"));
  CHECK_FALSE(is_valid_identifier("has space"));
  CHECK_FALSE(is_valid_identifier("quote\""));
}

TEST_CASE("identifier ordering is natural") {
  CHECK(identifier_less("U2", "U10"));
  CHECK_FALSE(identifier_less("U10", "U2"));
  CHECK(identifier_less("SC9", "SC10"));
  CHECK(identifier_less("H1", "H2"));
  CHECK(identifier_less("OB-S1-EFF", "OB-U1-ANA"));
  CHECK(identifier_less("OB-U1-ANA", "OB-U1-EXEC"));
  // equal numeric value, different spelling: leading zeros sort first
  CHECK(identifier_less("U01", "U1"));
  CHECK_FALSE(identifier_less("U1", "U01"));
  CHECK_FALSE(identifier_less("U1", "U1"));
  // digit run against letter run
  CHECK(identifier_less("A1B", "A1C"));
  CHECK(identifier_less("A2", "A10B"));
}

TEST_CASE("role boundaries") {
  CHECK(boundary_for_role(ElementRole::Controller) == Boundary::Managed);
  CHECK(boundary_for_role(ElementRole::Process) == Boundary::Managed);
  CHECK(boundary_for_role(ElementRole::Sensor) == Boundary::Managed);
  CHECK(boundary_for_role(ElementRole::Actuator) == Boundary::Managed);
  CHECK(boundary_for_role(ElementRole::Probe) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Effector) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Monitor) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Analyzer) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Planner) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Executor) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Knowledge) == Boundary::Managing);
  CHECK(boundary_for_role(ElementRole::Environment) == Boundary::External);
  CHECK(boundary_for_role(ElementRole::HigherOrderController) ==
        Boundary::External);
}

TEST_CASE("keyword round-trips") {
  for (int i = 0; i < 13; ++i) {
    const auto role = static_cast<ElementRole>(i);
    CHECK(role_from_keyword(to_keyword(role)) == role);
  }
  for (int i = 0; i < 12; ++i) {
    const auto kind = static_cast<LinkKind>(i);
    CHECK(link_kind_from_keyword(to_keyword(kind)) == kind);
  }
  CHECK(to_keyword(GuidePhrase::Provided) == "provided");
  CHECK(to_keyword(GuidePhrase::NotProvided) == "not_provided");
  CHECK(to_keyword(GuidePhrase::TooEarlyOrTooLate) == "too_early_or_too_late");
  CHECK(to_keyword(GuidePhrase::TooLongOrStoppedTooSoon) ==
        "too_long_or_stopped_too_soon");
  CHECK(role_from_keyword("NotARole") == std::nullopt);
  CHECK(to_string(AdaptationType::TIIb) == "IIb");
  CHECK(adaptation_type_from_keyword("III") == AdaptationType::TIII);
}

TEST_CASE("enumerable link kinds") {
  CHECK(is_enumerable(LinkKind::ControlAction));
  CHECK(is_enumerable(LinkKind::KnowledgeUpdate));
  CHECK(is_enumerable(LinkKind::Trigger));
  CHECK(is_enumerable(LinkKind::Plan));
  CHECK(is_enumerable(LinkKind::AdaptationAction));
  CHECK(is_enumerable(LinkKind::EffectorChange));
  CHECK_FALSE(is_enumerable(LinkKind::Feedback));
  CHECK_FALSE(is_enumerable(LinkKind::MonitoredValue));
  CHECK_FALSE(is_enumerable(LinkKind::ProbeData));
  CHECK_FALSE(is_enumerable(LinkKind::KnowledgeRead));
  CHECK_FALSE(is_enumerable(LinkKind::ControlInput));
  CHECK_FALSE(is_enumerable(LinkKind::Disturbance));
}

TEST_CASE("type ranks") {
  CHECK(type_rank(AdaptationType::T0) == 0);
  CHECK(type_rank(AdaptationType::TI) == 1);
  CHECK(type_rank(AdaptationType::TII) == 2);
  CHECK(type_rank(AdaptationType::TIIb) == 2);
  CHECK(type_rank(AdaptationType::TIII) == 3);
}

TEST_CASE("builtin causal factors") {
  CHECK(builtin_causal_factors().size() == 20);
  Project project;
  CHECK(factor_known(project, "changed_environment"));
  CHECK(factor_known(project, "unsafe_adaptation_option"));
  CHECK_FALSE(factor_known(project, "made_up_factor"));
  FactorDeclaration extension;
  extension.id = "made_up_factor";
  project.factor_extensions.push_back(extension);
  CHECK(factor_known(project, "made_up_factor"));
}

TEST_CASE("lookup and resolution") {
  Project project;
  project.name = "T";
  Element controller;
  controller.id = "C";
  controller.role = ElementRole::Controller;
  controller.boundary = Boundary::Managed;
  project.elements.push_back(controller);
  Link link;
  link.id = "CA1";
  link.kind = LinkKind::ControlAction;
  link.source = "C";
  link.target = "C";
  project.links.push_back(link);
  Hazard hazard;
  hazard.id = "H1";
  project.hazards.push_back(hazard);

  CHECK(find_element(project, "C") != nullptr);
  CHECK(find_element(project, "X") == nullptr);
  CHECK(find_link(project, "CA1") != nullptr);
  CHECK(find_hazard(project, "H1") != nullptr);

  const std::optional<EntityRef> hit = resolve(project, "CA1");
  REQUIRE(hit.has_value());
  CHECK(std::holds_alternative<const Link*>(*hit));
  CHECK_FALSE(resolve(project, "H9").has_value());
}

TEST_CASE("enumerable actions keep declaration order") {
  Project project;
  for (const char* id : {"CA10", "CA2", "FB1", "CA1"}) {
    Link link;
    link.id = id;
    link.kind = id[0] == 'F' ? LinkKind::Feedback : LinkKind::ControlAction;
    project.links.push_back(link);
  }
  const auto actions = enumerable_actions(project);
  REQUIRE(actions.size() == 3);
  CHECK(actions[0]->id == "CA10");
  CHECK(actions[1]->id == "CA2");
  CHECK(actions[2]->id == "CA1");
}
