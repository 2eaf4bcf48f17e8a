#include "stpaw/validator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace stpaw {
namespace {

int rule_number(std::string_view rule) {
  int value = 0;
  for (char c : rule.substr(1)) value = value * 10 + (c - '0');
  return value;
}

bool role_in(ElementRole role, std::initializer_list<ElementRole> set) {
  return std::find(set.begin(), set.end(), role) != set.end();
}

std::string link_phrase(const Link& link, const Project& project) {
  const Element* source = find_element(project, link.source);
  const Element* target = find_element(project, link.target);
  std::string text = "link '" + link.id + "' of kind " +
                     std::string(to_keyword(link.kind)) + " from " +
                     std::string(source ? to_keyword(source->role) : "?") +
                     " to " + std::string(target ? to_keyword(target->role) : "?");
  return text;
}

struct Collector {
  std::vector<Finding> findings;

  void add(std::string rule, Severity severity, std::string message,
           SourceSpan span) {
    findings.push_back(
        Finding{std::move(rule), severity, std::move(message), std::move(span)});
  }
};

void check_boundaries(const Project& project, bool managed_populated,
                      bool managing_populated, Collector& out) {
  if (!managed_populated) {
    out.add("R1", Severity::Error,
            "the managed boundary is unpopulated; at least one managed element "
            "is required",
            project.span);
  }
  if (!managing_populated) {
    out.add("R1", Severity::Error,
            "the managing boundary is unpopulated; at least one managing "
            "element is required",
            project.span);
  }
}

void check_roles(const Project& project, bool managed_populated,
                 bool managing_populated, Collector& out) {
  const std::map<ElementRole, std::size_t> inventory = element_inventory(project);
  if (managed_populated && inventory.at(ElementRole::Process) == 0) {
    out.add("R2", Severity::Error,
            "the managed boundary contains no Process element", project.span);
  }
  if (managing_populated) {
    if (inventory.at(ElementRole::Probe) == 0) {
      out.add("R4", Severity::Error,
              "no Probe element; the managing system cannot observe the "
              "managed system",
              project.span);
    }
    if (inventory.at(ElementRole::Effector) == 0) {
      out.add("R4", Severity::Error,
              "no Effector element; the managing system cannot act on the "
              "managed system",
              project.span);
    }
    for (ElementRole role :
         {ElementRole::Monitor, ElementRole::Analyzer, ElementRole::Planner,
          ElementRole::Executor}) {
      if (inventory.at(role) == 0) {
        out.add("R7", Severity::Error,
                "the managing boundary contains no " +
                    std::string(to_keyword(role)) + " element",
                project.span);
      }
    }
    const std::size_t knowledge = inventory.at(ElementRole::Knowledge);
    if (knowledge == 0) {
      out.add("R8", Severity::Error, "no Knowledge element; exactly one is required",
              project.span);
    } else if (knowledge > 1) {
      out.add("R8", Severity::Error,
              std::to_string(knowledge) +
                  " Knowledge elements; exactly one is required",
              project.span);
    }
  }
}

void check_effector_changes(const Project& project, Collector& out) {
  for (const Link& link : project.links) {
    if (link.kind != LinkKind::EffectorChange) continue;
    const Element* target = find_element(project, link.target);
    if (target != nullptr && target->role == ElementRole::Environment) {
      out.add("R5", Severity::Error,
              "effector change '" + link.id +
                  "' targets the Environment; effector changes must stay "
                  "inside the system",
              link.span);
    }
  }
}

void check_monitored_values(const Project& project, Collector& out) {
  for (const Link& link : project.links) {
    if (link.kind != LinkKind::MonitoredValue) continue;
    const Element* source = find_element(project, link.source);
    if (source == nullptr) continue;
    if (!role_in(source->role,
                 {ElementRole::Controller, ElementRole::Sensor,
                  ElementRole::Actuator, ElementRole::Process,
                  ElementRole::Environment})) {
      out.add("R6", Severity::Error,
              "monitored value '" + link.id + "' originates in a " +
                  std::string(to_keyword(source->role)) +
                  "; monitored values come from the managed system or the "
                  "environment",
              link.span);
    }
  }
}

void check_uniqueness_and_references(const Project& project, Collector& out) {
  std::map<std::string, std::vector<SourceSpan>, std::less<>> by_id;
  for (const Loss& e : project.losses) by_id[e.id].push_back(e.span);
  for (const Hazard& e : project.hazards) by_id[e.id].push_back(e.span);
  for (const FactorDeclaration& e : project.factor_extensions)
    by_id[e.id].push_back(e.span);
  for (const Element& e : project.elements) by_id[e.id].push_back(e.span);
  for (const Link& e : project.links) by_id[e.id].push_back(e.span);
  for (const AdaptationDeclaration& e : project.adaptations)
    by_id[e.id].push_back(e.span);
  for (const UnsafeControlAction& e : project.ucas) by_id[e.id].push_back(e.span);
  for (const LossScenario& e : project.scenarios) by_id[e.id].push_back(e.span);
  for (const Mitigation& e : project.mitigations) by_id[e.id].push_back(e.span);
  for (const auto& [id, spans] : by_id) {
    for (std::size_t i = 1; i < spans.size(); ++i) {
      out.add("R10", Severity::Error, "duplicate identifier '" + id + "'",
              spans[i]);
    }
  }

  const auto require = [&](const Identifier& id, const SourceSpan& span,
                           std::string_view noun, bool ok) {
    if (!ok) {
      out.add("R10", Severity::Error,
              "'" + id + "' does not resolve to a " + std::string(noun), span);
    }
  };

  for (const Link& link : project.links) {
    require(link.source, link.span, "element",
            find_element(project, link.source) != nullptr);
    require(link.target, link.span, "element",
            find_element(project, link.target) != nullptr);
  }
  for (const Hazard& hazard : project.hazards) {
    for (const Identifier& id : hazard.leads_to) {
      require(id, hazard.span, "loss", find_loss(project, id) != nullptr);
    }
  }
  for (const UnsafeControlAction& uca : project.ucas) {
    require(uca.action, uca.span, "link", find_link(project, uca.action) != nullptr);
    for (const Identifier& id : uca.hazards) {
      require(id, uca.span, "hazard", find_hazard(project, id) != nullptr);
    }
  }
  for (const NotApplicableRecord& record : project.na_records) {
    require(record.action, record.span, "link",
            find_link(project, record.action) != nullptr);
  }
  for (const LossScenario& scenario : project.scenarios) {
    require(scenario.uca, scenario.span, "uca",
            find_uca(project, scenario.uca) != nullptr);
    for (const std::string& factor : scenario.factors) {
      require(factor, scenario.span, "causal factor",
              factor_known(project, factor));
    }
  }
  for (const Mitigation& mitigation : project.mitigations) {
    for (const Identifier& id : mitigation.addresses) {
      require(id, mitigation.span, "uca or scenario",
              find_uca(project, id) != nullptr ||
                  find_scenario(project, id) != nullptr);
    }
  }
}

void check_hazard_linkage(const Project& project, Collector& out) {
  for (const Hazard& hazard : project.hazards) {
    if (hazard.leads_to.empty()) {
      out.add("R11", Severity::Error,
              "hazard '" + hazard.id + "' does not lead to any loss",
              hazard.span);
    }
  }
  for (const UnsafeControlAction& uca : project.ucas) {
    if (uca.hazards.empty()) {
      out.add("R11", Severity::Error,
              "uca '" + uca.id + "' is not linked to any hazard", uca.span);
    }
  }
}

}  // namespace

std::optional<Finding> check_link(const Link& link, const Project& project) {
  const Element* source = find_element(project, link.source);
  const Element* target = find_element(project, link.target);
  if (source == nullptr || target == nullptr) return std::nullopt;

  const auto fail = [&]() -> std::optional<Finding> {
    return Finding{"R9", Severity::Error,
                   link_phrase(link, project) + " is not a permitted connection",
                   link.span};
  };
  const auto ok = [&](bool source_ok, bool target_ok) -> std::optional<Finding> {
    if (source_ok && target_ok) return std::nullopt;
    return fail();
  };

  switch (link.kind) {
    case LinkKind::ControlAction:
      return ok(role_in(source->role, {ElementRole::Controller,
                                       ElementRole::HigherOrderController}),
                role_in(target->role, {ElementRole::Actuator, ElementRole::Process,
                                       ElementRole::Controller}));
    case LinkKind::Feedback:
      return ok(role_in(source->role, {ElementRole::Sensor, ElementRole::Process}),
                target->role == ElementRole::Controller);
    case LinkKind::MonitoredValue:
      // Source is R6's concern.
      return ok(true, target->role == ElementRole::Probe);
    case LinkKind::ProbeData:
      return ok(source->role == ElementRole::Probe,
                target->role == ElementRole::Monitor);
    case LinkKind::EffectorChange:
      // An Environment target is R5's concern.
      if (target->role == ElementRole::Environment) {
        return ok(source->role == ElementRole::Effector, true);
      }
      return ok(source->role == ElementRole::Effector,
                role_in(target->role,
                        {ElementRole::Controller, ElementRole::Sensor,
                         ElementRole::Actuator, ElementRole::Process}));
    case LinkKind::AdaptationAction:
      return ok(source->role == ElementRole::Executor,
                target->role == ElementRole::Effector);
    case LinkKind::KnowledgeUpdate:
      return ok(role_in(source->role,
                        {ElementRole::Monitor, ElementRole::Analyzer,
                         ElementRole::Planner, ElementRole::Executor}),
                target->role == ElementRole::Knowledge);
    case LinkKind::KnowledgeRead:
      return ok(source->role == ElementRole::Knowledge,
                role_in(target->role,
                        {ElementRole::Monitor, ElementRole::Analyzer,
                         ElementRole::Planner, ElementRole::Executor}));
    case LinkKind::Trigger:
      if (source->role == ElementRole::Monitor &&
          target->role == ElementRole::Analyzer)
        return std::nullopt;
      if (source->role == ElementRole::Analyzer &&
          target->role == ElementRole::Planner)
        return std::nullopt;
      return fail();
    case LinkKind::Plan:
      return ok(source->role == ElementRole::Planner,
                target->role == ElementRole::Executor);
    case LinkKind::ControlInput:
    case LinkKind::Disturbance:
      return ok(role_in(source->role, {ElementRole::Environment,
                                       ElementRole::HigherOrderController}),
                target->boundary == Boundary::Managed);
  }
  return std::nullopt;
}

std::vector<Finding> validate_structure(const Project& project) {
  Collector out;

  bool managed_populated = false;
  bool managing_populated = false;
  for (const Element& element : project.elements) {
    if (element.boundary == Boundary::Managed) managed_populated = true;
    if (element.boundary == Boundary::Managing) managing_populated = true;
  }

  check_boundaries(project, managed_populated, managing_populated, out);
  check_roles(project, managed_populated, managing_populated, out);
  check_effector_changes(project, out);
  check_monitored_values(project, out);
  for (const Link& link : project.links) {
    if (std::optional<Finding> finding = check_link(link, project)) {
      out.findings.push_back(std::move(*finding));
    }
  }
  check_uniqueness_and_references(project, out);
  check_hazard_linkage(project, out);
  if (project.adaptations.empty()) {
    out.add("R12", Severity::Warning,
            "the project declares no adaptation; identify and classify the "
            "adaptations the system performs",
            project.span);
  }

  std::stable_sort(out.findings.begin(), out.findings.end(),
                   [](const Finding& a, const Finding& b) {
                     const int ra = rule_number(a.rule);
                     const int rb = rule_number(b.rule);
                     if (ra != rb) return ra < rb;
                     if (a.span.start_line != b.span.start_line)
                       return a.span.start_line < b.span.start_line;
                     return a.span.start_col < b.span.start_col;
                   });
  return out.findings;
}

}  // namespace stpaw
