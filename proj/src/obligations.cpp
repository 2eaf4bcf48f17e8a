#include "stpaw/obligations.hpp"

#include <algorithm>
#include <map>

namespace stpaw {
namespace {

constexpr std::size_t kT0 = 0;
constexpr std::size_t kTI = 1;
constexpr std::size_t kTII = 2;
constexpr std::size_t kTIIb = 3;
constexpr std::size_t kTIII = 4;

std::array<bool, 5> types(std::initializer_list<std::size_t> list) {
  std::array<bool, 5> mask{};
  for (std::size_t index : list) mask[index] = true;
  return mask;
}

std::string instantiate(std::string_view text, std::string_view element) {
  std::string out;
  out.reserve(text.size() + element.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t brace = text.find("{element}", pos);
    if (brace == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, brace - pos));
    out.append(element);
    pos = brace + 9;
  }
  return out;
}

}  // namespace

std::string_view to_string(ObligationStage stage) {
  return stage == ObligationStage::Uca ? "uca" : "scenario";
}

std::string_view to_string(ObligationState state) {
  switch (state) {
    case ObligationState::Open: return "open";
    case ObligationState::Addressed: return "addressed";
    case ObligationState::NotApplicable: return "na";
  }
  return "open";
}

const std::vector<ObligationRule>& obligation_rules() {
  static const std::vector<ObligationRule> kRules = [] {
    std::vector<ObligationRule> rules;
    const auto add = [&](std::string_view id, ObligationStage stage,
                         std::array<bool, 5> mask,
                         std::vector<ElementRole> roles, std::string_view text,
                         std::string_view text_t1 = {},
                         std::string_view text_t3 = {}) {
      rules.push_back(ObligationRule{id, stage, mask, std::move(roles), text,
                                     text_t1, text_t3});
    };
    add("OB-U1", ObligationStage::Uca, types({kTI, kTII, kTIIb, kTIII}),
        {ElementRole::Analyzer, ElementRole::Planner, ElementRole::Executor},
        "Consider the possibility that {element} applies an adaptation option "
        "that is not in the pre-determined set of safe adaptation options.",
        {},
        "Consider the possibility that {element} applies an adaptation option "
        "that was not verified safe at run-time.");
    add("OB-U2", ObligationStage::Uca, types({kTII, kTIIb, kTIII}),
        {ElementRole::Analyzer, ElementRole::Planner, ElementRole::Executor},
        "Consider the possibility that {element} applies an adaptation option "
        "when its safety constraints are violated.");
    add("OB-U3", ObligationStage::Uca, types({kTII, kTIIb, kTIII}),
        {ElementRole::Monitor},
        "Consider the possibility that {element} incorrectly or inaccurately "
        "updates, is delayed in updating, or misses updates to the knowledge, "
        "or unnecessarily triggers analysis.");
    add("OB-U4", ObligationStage::Uca, types({kTII, kTIIb, kTIII}),
        {ElementRole::Executor},
        "Consider the possibility that {element} misses, is delayed, or "
        "incorrectly updates the system model after applying an adaptation.");
    add("OB-U5", ObligationStage::Uca, types({kTIII}), {ElementRole::Analyzer},
        "Consider the possibility that {element} is delayed or does not "
        "trigger a fail-safe when one is required.");
    add("OB-U6", ObligationStage::Uca, types({kTIII}),
        {ElementRole::Planner, ElementRole::Executor},
        "Consider the possibility that {element} is delayed in providing or "
        "does not provide the corresponding fail-safe system configuration.");
    add("OB-S1", ObligationStage::Scenario,
        types({kT0, kTI, kTII, kTIIb, kTIII}), {ElementRole::Effector},
        "Consider scenarios arising from inadequate or incorrect operation of "
        "{element}.",
        "Consider scenarios arising from inadequate or incorrect operation of "
        "{element}, including scenarios where it incorrectly applies an "
        "adaptation action.");
    add("OB-S2", ObligationStage::Scenario,
        types({kT0, kTI, kTII, kTIIb, kTIII}), {ElementRole::Probe},
        "Consider scenarios where {element} interferes with a safety-related "
        "function of the managed system.");
    add("OB-S3", ObligationStage::Scenario, types({kTI}),
        {ElementRole::Knowledge},
        "Consider scenarios where the adaptation options held in {element} "
        "differ from the predetermined safe set of options, e.g., due to data "
        "corruption.");
    add("OB-S4", ObligationStage::Scenario, types({kTII, kTIIb, kTIII}),
        {ElementRole::Probe},
        "Consider scenarios where {element} supplies delayed, inaccurate, "
        "incorrect, or no data.");
    add("OB-S5", ObligationStage::Scenario, types({kTII, kTIIb, kTIII}),
        {ElementRole::Knowledge},
        "Consider scenarios where the models held in {element} are "
        "incomplete, incorrect, or inconsistent.");
    add("OB-S6", ObligationStage::Scenario, types({kTIII}),
        {ElementRole::Effector},
        "Consider scenarios where the fail-safe configuration changes applied "
        "through {element} are delayed or not applied.");
    add("OB-S7", ObligationStage::Scenario, types({kTIII}),
        {ElementRole::Knowledge},
        "Consider scenarios where the models held in {element} are out-dated "
        "or in conflict.");
    return rules;
  }();
  return kRules;
}

std::vector<Obligation> generate(const Project& project, AdaptationType type) {
  std::vector<Obligation> obligations;
  const std::size_t type_index = static_cast<std::size_t>(type);
  for (const ObligationRule& rule : obligation_rules()) {
    if (!rule.applies_to[type_index]) continue;

    std::vector<const Element*> matches;
    for (const Element& element : project.elements) {
      if (std::find(rule.roles.begin(), rule.roles.end(), element.role) !=
          rule.roles.end()) {
        matches.push_back(&element);
      }
    }
    std::sort(matches.begin(), matches.end(),
              [](const Element* a, const Element* b) {
                return identifier_less(a->id, b->id);
              });
    for (const Element* element : matches) {
      std::string_view text = rule.text;
      if (type != AdaptationType::T0 && !rule.text_t1.empty())
        text = rule.text_t1;
      if (type == AdaptationType::TIII && !rule.text_t3.empty())
        text = rule.text_t3;
      const std::string_view display =
          element->name.empty() ? std::string_view(element->id) : element->name;
      obligations.push_back(Obligation{
          std::string(rule.id) + "-" + element->id, &rule, element->id,
          instantiate(text, display)});
    }
  }
  return obligations;
}

ObligationCoverage coverage(const Project& project,
                            const std::vector<Obligation>& obligations) {
  ObligationCoverage result;
  result.statuses.reserve(obligations.size());
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < obligations.size(); ++i) {
    ObligationStatus status;
    status.obligation = &obligations[i];
    result.statuses.push_back(std::move(status));
    index.emplace(obligations[i].id, i);
  }

  for (const ObligationResponse& response : project.obligation_responses) {
    const auto it = index.find(response.obligation_id);
    if (it == index.end()) {
      result.findings.push_back(Finding{
          "O002", Severity::Error,
          "response names unknown obligation '" + response.obligation_id +
              "'; it is not generated for this project",
          response.span});
      continue;
    }
    ObligationStatus& status = result.statuses[it->second];
    if (status.state != ObligationState::Open) {
      result.findings.push_back(Finding{
          "O004", Severity::Error,
          "duplicate response for obligation '" + response.obligation_id + "'",
          response.span});
      continue;
    }
    if (response.status == ResponseStatus::Addressed) {
      const ObligationStage stage = status.obligation->rule->stage;
      for (const Identifier& ref : response.by) {
        const bool ok = stage == ObligationStage::Uca
                            ? find_uca(project, ref) != nullptr
                            : find_scenario(project, ref) != nullptr;
        if (!ok) {
          result.findings.push_back(Finding{
              "O003", Severity::Error,
              "obligation '" + response.obligation_id + "' is a " +
                  std::string(to_string(stage)) + "-stage obligation; '" + ref +
                  "' does not resolve to a " +
                  (stage == ObligationStage::Uca ? "uca" : "scenario"),
              response.span});
        }
      }
      status.state = ObligationState::Addressed;
      status.by = response.by;
    } else {
      status.state = ObligationState::NotApplicable;
      status.reason = response.reason;
    }
  }

  for (const ObligationStatus& status : result.statuses) {
    switch (status.state) {
      case ObligationState::Open:
        ++result.open;
        result.findings.push_back(Finding{
            "O001", Severity::Warning,
            "obligation '" + status.obligation->id +
                "' is open; address it with recorded analysis or mark it na "
                "with a reason",
            project.span});
        break;
      case ObligationState::Addressed: ++result.addressed; break;
      case ObligationState::NotApplicable: ++result.not_applicable; break;
    }
  }
  return result;
}

}  // namespace stpaw
