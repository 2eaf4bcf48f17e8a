#pragma once

// Structural validation against the reference control-structure model.
// Rule catalog:
//   R1  error    managed and managing boundaries are both populated
//   R2  error    managed boundary contains at least one Process
//   R3  info     ControlInput/Disturbance only enter managed elements;
//                carries no finding of its own (the R9 row enforces it)
//   R4  error    at least one Probe and at least one Effector
//   R5  error    no EffectorChange link targets the Environment
//   R6  error    MonitoredValue sources are Controller, Sensor, Actuator,
//                Process, or Environment only
//   R7  error    managing boundary contains at least one each of Monitor,
//                Analyzer, Planner, and Executor
//   R8  error    exactly one Knowledge element
//   R9  error    every link's (kind, source role, target role) is in the
//                compatibility table
//   R10 error    identifiers are unique and every reference resolves to an
//                entity of the right kind (re-checked after parsing)
//   R11 error    every hazard leads to at least one loss; every UCA names
//                at least one hazard
//   R12 warning  the project declares at least one adaptation
//
// Boundary-local rules are gated so each is independently violable: R2
// fires only when the managed boundary is populated, R4, R7 and R8 only
// when the managing boundary is populated (an empty boundary is R1's
// finding alone).

#include <optional>
#include <vector>

#include "stpaw/diagnostics.hpp"
#include "stpaw/model.hpp"

namespace stpaw {

// All structural findings, ordered by rule number then source span.
std::vector<Finding> validate_structure(const Project& project);

// Single-link check against the R9 compatibility row for link.kind. R5 and
// R6 are separate rules and not reported here; links with unresolvable
// endpoints are skipped (R10 owns those). validate_structure's R9 output
// is exactly the concatenation of check_link over all links.
std::optional<Finding> check_link(const Link& link, const Project& project);

}  // namespace stpaw
