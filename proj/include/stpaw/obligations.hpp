#pragma once

// Analysis obligations. Each rule names the project types it applies to,
// the element roles it targets, and the analysis stage it belongs to;
// instantiating the rule table against a project's element inventory
// yields one obligation per (rule, matching element). Obligation ids are
// deterministic: "<rule>-<element>". The set is monotone in the type
// order except OB-S3, which applies to type I only.

#include <array>
#include <string>
#include <vector>

#include "stpaw/diagnostics.hpp"
#include "stpaw/model.hpp"

namespace stpaw {

// Uca-stage obligations are discharged by recording UCAs; scenario-stage
// ones by recording loss scenarios.
enum class ObligationStage : std::uint8_t { Uca, Scenario };

std::string_view to_string(ObligationStage stage);  // "uca", "scenario"

struct ObligationRule {
  std::string_view id;  // "OB-U1".."OB-U6", "OB-S1".."OB-S7"
  ObligationStage stage = ObligationStage::Uca;
  std::array<bool, 5> applies_to{};  // indexed by AdaptationType
  std::vector<ElementRole> roles;
  std::string_view text;     // template; "{element}" is the element name
  std::string_view text_t1;  // variant for type I and above; empty = text
  std::string_view text_t3;  // variant for type III; empty = fall through
};

// The thirteen-rule catalog, in id order.
const std::vector<ObligationRule>& obligation_rules();

struct Obligation {
  std::string id;  // "<rule>-<element>"
  const ObligationRule* rule = nullptr;
  Identifier element;
  std::string text;  // instantiated for the element and project type
};

// Obligations for analyzing the project at the given type, ordered by rule
// id then element id (natural order).
std::vector<Obligation> generate(const Project& project, AdaptationType type);

enum class ObligationState : std::uint8_t { Open, Addressed, NotApplicable };

std::string_view to_string(ObligationState state);  // "open", "addressed", "na"

struct ObligationStatus {
  const Obligation* obligation = nullptr;
  ObligationState state = ObligationState::Open;
  std::vector<Identifier> by;  // when addressed
  std::string reason;          // when na
};

// Coverage of the generated set by the project's obligation_response
// records. Findings:
//   O001 warning  open obligation (no response)
//   O002 error    response naming an obligation not in the generated set
//   O003 error    addressed-by reference that does not resolve to an
//                 entity of the rule's stage
//   O004 error    duplicate response for one obligation
struct ObligationCoverage {
  std::vector<ObligationStatus> statuses;  // generation order
  std::size_t open = 0;
  std::size_t addressed = 0;
  std::size_t not_applicable = 0;
  std::vector<Finding> findings;
};

ObligationCoverage coverage(const Project& project,
                            const std::vector<Obligation>& obligations);

}  // namespace stpaw
