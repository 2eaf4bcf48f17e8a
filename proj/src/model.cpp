#include "stpaw/model.hpp"

#include <algorithm>
#include <cctype>

namespace stpaw {

bool is_valid_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

bool identifier_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const unsigned char ca = static_cast<unsigned char>(a[i]);
    const unsigned char cb = static_cast<unsigned char>(b[j]);
    if (std::isdigit(ca) && std::isdigit(cb)) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      std::string_view da = a.substr(i, ia - i);
      std::string_view db = b.substr(j, jb - j);
      std::string_view ta = da.substr(std::min(da.find_first_not_of('0'), da.size() - 1));
      std::string_view tb = db.substr(std::min(db.find_first_not_of('0'), db.size() - 1));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = ia;
      j = jb;
      continue;
    }
    if (ca != cb) return ca < cb;
    ++i;
    ++j;
  }
  if (i == a.size() && j == b.size()) return a < b;  // tie-break on raw text
  return i == a.size();
}

namespace {

constexpr std::array<std::string_view, kElementRoleCount> kRoleNames = {
    "Controller", "Process",  "Sensor",   "Actuator", "Probe",
    "Effector",   "Monitor",  "Analyzer", "Planner",  "Executor",
    "Knowledge",  "HigherOrderController", "Environment",
};

constexpr std::array<std::string_view, kLinkKindCount> kLinkKindNames = {
    "ControlAction",  "Feedback",        "MonitoredValue", "ProbeData",
    "EffectorChange", "AdaptationAction", "KnowledgeUpdate", "KnowledgeRead",
    "Trigger",        "Plan",            "ControlInput",   "Disturbance",
};

constexpr std::array<std::string_view, kGuidePhraseCount> kPhraseNames = {
    "provided", "not_provided", "too_early_or_too_late",
    "too_long_or_stopped_too_soon",
};

constexpr std::array<std::string_view, 3> kBoundaryNames = {"managed", "managing",
                                                            "external"};

constexpr std::array<std::string_view, 5> kTypeNames = {"0", "I", "II", "IIb",
                                                         "III"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& table,
                           std::string_view word) {
  for (std::size_t i = 0; i < N; ++i) {
    if (table[i] == word) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

}  // namespace

Boundary boundary_for_role(ElementRole role) {
  switch (role) {
    case ElementRole::Controller:
    case ElementRole::Process:
    case ElementRole::Sensor:
    case ElementRole::Actuator:
      return Boundary::Managed;
    case ElementRole::Probe:
    case ElementRole::Effector:
    case ElementRole::Monitor:
    case ElementRole::Analyzer:
    case ElementRole::Planner:
    case ElementRole::Executor:
    case ElementRole::Knowledge:
      return Boundary::Managing;
    case ElementRole::HigherOrderController:
    case ElementRole::Environment:
      return Boundary::External;
  }
  return Boundary::External;
}

bool is_enumerable(LinkKind kind) {
  switch (kind) {
    case LinkKind::ControlAction:
    case LinkKind::AdaptationAction:
    case LinkKind::EffectorChange:
    case LinkKind::KnowledgeUpdate:
    case LinkKind::Trigger:
    case LinkKind::Plan:
      return true;
    default:
      return false;
  }
}

std::string_view to_keyword(ElementRole role) {
  return kRoleNames[static_cast<std::size_t>(role)];
}
std::string_view to_keyword(Boundary boundary) {
  return kBoundaryNames[static_cast<std::size_t>(boundary)];
}
std::string_view to_keyword(LinkKind kind) {
  return kLinkKindNames[static_cast<std::size_t>(kind)];
}
std::string_view to_keyword(GuidePhrase phrase) {
  return kPhraseNames[static_cast<std::size_t>(phrase)];
}

std::optional<ElementRole> role_from_keyword(std::string_view word) {
  return lookup<ElementRole>(kRoleNames, word);
}
std::optional<Boundary> boundary_from_keyword(std::string_view word) {
  return lookup<Boundary>(kBoundaryNames, word);
}
std::optional<LinkKind> link_kind_from_keyword(std::string_view word) {
  return lookup<LinkKind>(kLinkKindNames, word);
}
std::optional<GuidePhrase> phrase_from_keyword(std::string_view word) {
  return lookup<GuidePhrase>(kPhraseNames, word);
}

std::string_view to_string(AdaptationType type) {
  return kTypeNames[static_cast<std::size_t>(type)];
}
std::optional<AdaptationType> adaptation_type_from_keyword(std::string_view word) {
  return lookup<AdaptationType>(kTypeNames, word);
}

std::string_view to_keyword(OptionSet value) {
  return value == OptionSet::Predetermined ? "predetermined" : "runtime";
}
std::string_view to_keyword(Assurance value) {
  switch (value) {
    case Assurance::Unconditional: return "unconditional";
    case Assurance::Conditional: return "conditional";
    case Assurance::Runtime: return "runtime";
  }
  return "unconditional";
}
std::optional<OptionSet> option_set_from_keyword(std::string_view word) {
  if (word == "predetermined") return OptionSet::Predetermined;
  if (word == "runtime") return OptionSet::Runtime;
  return std::nullopt;
}
std::optional<Assurance> assurance_from_keyword(std::string_view word) {
  if (word == "unconditional") return Assurance::Unconditional;
  if (word == "conditional") return Assurance::Conditional;
  if (word == "runtime") return Assurance::Runtime;
  return std::nullopt;
}

int type_rank(AdaptationType type) {
  switch (type) {
    case AdaptationType::T0: return 0;
    case AdaptationType::TI: return 1;
    case AdaptationType::TII:
    case AdaptationType::TIIb: return 2;
    case AdaptationType::TIII: return 3;
  }
  return 0;
}

const std::vector<std::string_view>& builtin_causal_factors() {
  static const std::vector<std::string_view> kFactors = {
      "changed_environment",   "conflicting_goals",
      "missing_plan",          "missing_action",
      "missing_config_change", "missing_control_action",
      "incorrect_knowledge",   "incomplete_knowledge",
      "inconsistent_knowledge", "unsafe_adaptation_option",
      "inappropriate_control_action", "delayed_update",
      "missed_update",         "inaccurate_data",
      "no_data",               "probe_interference",
      "effector_interference", "corrupted_option_set",
      "outdated_goals",        "failsafe_not_applied",
  };
  return kFactors;
}

bool is_builtin_causal_factor(std::string_view name) {
  const auto& factors = builtin_causal_factors();
  return std::find(factors.begin(), factors.end(), name) != factors.end();
}

namespace {

template <typename T>
const T* find_by_id(const std::vector<T>& items, std::string_view id) {
  for (const T& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

}  // namespace

std::optional<EntityRef> resolve(const Project& project, std::string_view id) {
  if (const Loss* p = find_by_id(project.losses, id)) return EntityRef{p};
  if (const Hazard* p = find_by_id(project.hazards, id)) return EntityRef{p};
  if (const Element* p = find_by_id(project.elements, id)) return EntityRef{p};
  if (const Link* p = find_by_id(project.links, id)) return EntityRef{p};
  if (const AdaptationDeclaration* p = find_by_id(project.adaptations, id))
    return EntityRef{p};
  if (const UnsafeControlAction* p = find_by_id(project.ucas, id))
    return EntityRef{p};
  if (const LossScenario* p = find_by_id(project.scenarios, id))
    return EntityRef{p};
  if (const Mitigation* p = find_by_id(project.mitigations, id))
    return EntityRef{p};
  if (const FactorDeclaration* p = find_by_id(project.factor_extensions, id))
    return EntityRef{p};
  return std::nullopt;
}

const Element* find_element(const Project& project, std::string_view id) {
  return find_by_id(project.elements, id);
}
const Link* find_link(const Project& project, std::string_view id) {
  return find_by_id(project.links, id);
}
const Hazard* find_hazard(const Project& project, std::string_view id) {
  return find_by_id(project.hazards, id);
}
const Loss* find_loss(const Project& project, std::string_view id) {
  return find_by_id(project.losses, id);
}
const UnsafeControlAction* find_uca(const Project& project, std::string_view id) {
  return find_by_id(project.ucas, id);
}
const LossScenario* find_scenario(const Project& project, std::string_view id) {
  return find_by_id(project.scenarios, id);
}

std::vector<const Link*> enumerable_actions(const Project& project) {
  std::vector<const Link*> actions;
  for (const Link& link : project.links) {
    if (is_enumerable(link.kind)) actions.push_back(&link);
  }
  return actions;
}

std::map<ElementRole, std::size_t> element_inventory(const Project& project) {
  std::map<ElementRole, std::size_t> counts;
  for (std::size_t i = 0; i < kElementRoleCount; ++i) {
    counts[static_cast<ElementRole>(i)] = 0;
  }
  for (const Element& element : project.elements) {
    ++counts[element.role];
  }
  return counts;
}

bool factor_known(const Project& project, std::string_view name) {
  if (is_builtin_causal_factor(name)) return true;
  return find_by_id(project.factor_extensions, name) != nullptr;
}

}  // namespace stpaw
