#pragma once

// Adaptation taxonomy. Types order as 0 < I < II = IIb < III; IIb is the
// monotonic special case of II. Classification is a total function of the
// four declared attributes:
//   affects_safety = false                          -> 0
//   option_set = runtime or assurance = runtime     -> III
//   assurance = unconditional                       -> I
//   assurance = conditional                         -> II (IIb if monotonic)

#include <string>
#include <vector>

#include "stpaw/diagnostics.hpp"
#include "stpaw/model.hpp"

namespace stpaw {

struct Classification {
  AdaptationType type = AdaptationType::T0;
  std::vector<std::string> rationale;  // one step per decision taken
};

Classification classify(const AdaptationDeclaration& declaration);

struct ClassificationRow {
  Identifier adaptation;
  AdaptationType declared = AdaptationType::T0;
  AdaptationType computed = AdaptationType::T0;
  std::vector<std::string> rationale;
  bool mismatch = false;
};

// project_type: highest computed rank; among rank-2 adaptations the
// representative is IIb only when all of them are IIb. No adaptations at
// all classifies the project as type 0.
struct ClassificationReport {
  std::vector<ClassificationRow> rows;  // declaration order
  AdaptationType project_type = AdaptationType::T0;
  std::vector<Finding> findings;  // C001 per mismatch, error severity
};

ClassificationReport check_declarations(const Project& project);

}  // namespace stpaw
