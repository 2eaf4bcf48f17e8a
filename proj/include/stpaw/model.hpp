#pragma once

// Core domain model for hazard analysis of MAPE-K self-adaptive systems:
// losses, hazards, the typed control structure, adaptation declarations,
// unsafe control actions, loss scenarios, and mitigations. Everything here
// is immutable after parsing; all queries are pure.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stpaw {

// Identifiers are plain tokens: leading letter, then letters, digits,
// underscore, hyphen. One global namespace per project.
using Identifier = std::string;

bool is_valid_identifier(std::string_view text);

// Natural order: digit runs compare numerically ("U2" < "U10"), everything
// else byte-wise. Used for every sorted surface (canonical form, exports).
bool identifier_less(std::string_view a, std::string_view b);

// 1-based positions; end column is inclusive (the last covered character).
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;
};

enum class ElementRole : std::uint8_t {
  Controller,
  Process,
  Sensor,
  Actuator,
  Probe,
  Effector,
  Monitor,
  Analyzer,
  Planner,
  Executor,
  Knowledge,
  HigherOrderController,
  Environment,
};
inline constexpr std::size_t kElementRoleCount = 13;

enum class Boundary : std::uint8_t { Managed, Managing, External };

// Each role has exactly one legal boundary; the `in <boundary>` clause in
// the DSL is redundant but checked for consistency.
Boundary boundary_for_role(ElementRole role);

enum class LinkKind : std::uint8_t {
  ControlAction,
  Feedback,
  MonitoredValue,
  ProbeData,
  EffectorChange,
  AdaptationAction,
  KnowledgeUpdate,
  KnowledgeRead,
  Trigger,
  Plan,
  ControlInput,
  Disturbance,
};
inline constexpr std::size_t kLinkKindCount = 12;

// The UCA-capable subset of link kinds. Membership is decided solely by
// kind: {ControlAction, AdaptationAction, EffectorChange, KnowledgeUpdate,
// Trigger, Plan}.
bool is_enumerable(LinkKind kind);

enum class GuidePhrase : std::uint8_t {
  Provided,
  NotProvided,
  TooEarlyOrTooLate,
  TooLongOrStoppedTooSoon,
};
inline constexpr std::size_t kGuidePhraseCount = 4;

std::string_view to_keyword(ElementRole role);
std::string_view to_keyword(Boundary boundary);
std::string_view to_keyword(LinkKind kind);
std::string_view to_keyword(GuidePhrase phrase);
std::optional<ElementRole> role_from_keyword(std::string_view word);
std::optional<Boundary> boundary_from_keyword(std::string_view word);
std::optional<LinkKind> link_kind_from_keyword(std::string_view word);
std::optional<GuidePhrase> phrase_from_keyword(std::string_view word);

struct Loss {
  Identifier id;
  std::string description;
  SourceSpan span;
};

struct Hazard {
  Identifier id;
  std::string description;
  std::vector<Identifier> leads_to;  // losses, >= 1
  SourceSpan span;
};

// Model kinds a Knowledge repository may hold.
struct KnowledgeModels {
  bool managed_system = false;
  bool environment = false;
  bool goals = false;
  bool working = false;
};

struct Element {
  Identifier id;
  ElementRole role = ElementRole::Controller;
  Boundary boundary = Boundary::Managed;
  std::string name;
  std::optional<KnowledgeModels> models;  // Knowledge role only
  SourceSpan span;
};

struct Link {
  Identifier id;
  LinkKind kind = LinkKind::ControlAction;
  Identifier source;
  Identifier target;
  std::string label;  // the action/signal name
  SourceSpan span;
};

enum class OptionSet : std::uint8_t { Predetermined, Runtime };
enum class Assurance : std::uint8_t { Unconditional, Conditional, Runtime };

// IIb is a special case of II (monotonically strengthening assumptions);
// it ranks equal to II.
enum class AdaptationType : std::uint8_t { T0, TI, TII, TIIb, TIII };

std::string_view to_string(AdaptationType type);  // "0", "I", "II", "IIb", "III"
std::optional<AdaptationType> adaptation_type_from_keyword(std::string_view word);
std::string_view to_keyword(OptionSet value);
std::string_view to_keyword(Assurance value);
std::optional<OptionSet> option_set_from_keyword(std::string_view word);
std::optional<Assurance> assurance_from_keyword(std::string_view word);

// Rank under T0 < TI < TII = TIIb < TIII.
int type_rank(AdaptationType type);

struct AdaptationDeclaration {
  Identifier id;
  bool affects_safety = false;
  OptionSet option_set = OptionSet::Predetermined;
  Assurance assurance = Assurance::Unconditional;
  bool monotonic = false;
  AdaptationType declared_type = AdaptationType::T0;
  SourceSpan span;
};

struct UnsafeControlAction {
  Identifier id;
  Identifier action;  // link of enumerable kind
  GuidePhrase phrase = GuidePhrase::Provided;
  std::string context;
  std::vector<Identifier> hazards;  // >= 1
  SourceSpan span;
};

struct NotApplicableRecord {
  Identifier action;
  GuidePhrase phrase = GuidePhrase::Provided;
  std::string reason;
  SourceSpan span;
};

// Project-declared causal-factor vocabulary extension.
struct FactorDeclaration {
  Identifier id;
  std::string description;
  SourceSpan span;
};

struct LossScenario {
  Identifier id;
  Identifier uca;
  std::vector<std::string> factors;  // built-in or declared, >= 1
  std::string narrative;
  SourceSpan span;
};

struct Mitigation {
  Identifier id;
  std::string statement;  // shall-form
  std::vector<Identifier> addresses;  // UCAs and/or scenarios, >= 1
  SourceSpan span;
};

enum class ResponseStatus : std::uint8_t { Addressed, NotApplicable };

struct ObligationResponse {
  std::string obligation_id;  // deterministic, may predate generation
  ResponseStatus status = ResponseStatus::Addressed;
  std::vector<Identifier> by;  // UCAs/scenarios, required when addressed
  std::string reason;          // required when na
  SourceSpan span;
};

// Built-in causal-factor vocabulary.
const std::vector<std::string_view>& builtin_causal_factors();
bool is_builtin_causal_factor(std::string_view name);

struct Project {
  std::string name;
  SourceSpan span;  // of the project declaration
  std::vector<Loss> losses;
  std::vector<Hazard> hazards;
  std::vector<FactorDeclaration> factor_extensions;
  std::vector<Element> elements;
  std::vector<Link> links;
  std::vector<AdaptationDeclaration> adaptations;
  std::vector<UnsafeControlAction> ucas;
  std::vector<NotApplicableRecord> na_records;
  std::vector<LossScenario> scenarios;
  std::vector<Mitigation> mitigations;
  std::vector<ObligationResponse> obligation_responses;
};

using EntityRef = std::variant<const Loss*, const Hazard*, const Element*,
                               const Link*, const AdaptationDeclaration*,
                               const UnsafeControlAction*, const LossScenario*,
                               const Mitigation*, const FactorDeclaration*>;

// Unique entity with that identifier, or nullopt (unknown identifier).
// With duplicate ids (an invalid project) the first declaration wins.
std::optional<EntityRef> resolve(const Project& project, std::string_view id);

const Element* find_element(const Project& project, std::string_view id);
const Link* find_link(const Project& project, std::string_view id);
const Hazard* find_hazard(const Project& project, std::string_view id);
const Loss* find_loss(const Project& project, std::string_view id);
const UnsafeControlAction* find_uca(const Project& project, std::string_view id);
const LossScenario* find_scenario(const Project& project, std::string_view id);

// Links of enumerable kind, in declaration order, no duplicates.
std::vector<const Link*> enumerable_actions(const Project& project);

// Every element counted under exactly one role; all roles present.
std::map<ElementRole, std::size_t> element_inventory(const Project& project);

// True when the factor name is a built-in or declared by the project.
bool factor_known(const Project& project, std::string_view name);

}  // namespace stpaw
