#pragma once

// Guide-phrase candidate matrix: every enumerable action crossed with the
// four guide phrases. Each cell is covered (>= 1 UCA), waived (na record),
// or open. Cell count is exactly 4 * |enumerable actions| and the three
// states partition it.

#include <optional>
#include <string>
#include <vector>

#include "stpaw/diagnostics.hpp"
#include "stpaw/model.hpp"

namespace stpaw {

enum class CellState : std::uint8_t { Open, Covered, NotApplicable };

struct CandidateCell {
  const Link* action = nullptr;
  GuidePhrase phrase = GuidePhrase::Provided;
  CellState state = CellState::Open;
  std::vector<const UnsafeControlAction*> ucas;  // declaration order
  std::string na_reason;
};

// All cells, ordered by action id (natural order) then phrase order.
std::vector<CandidateCell> candidates(const Project& project);

// Findings over the matrix:
//   U001 warning  open cell
//   U002 warning  na record for a cell that also has a UCA
//   U003 error    UCA on a non-enumerable link
//   U004 warning  na record on a non-enumerable link
struct UcaCoverage {
  std::vector<CandidateCell> cells;
  std::size_t open = 0;
  std::size_t covered = 0;
  std::size_t not_applicable = 0;
  std::vector<Finding> findings;
};

UcaCoverage uca_coverage(const Project& project);

// Readable rendering: "<source element name> <phrase> <action label>
// <context>, leading to [<hazards>]". nullopt when the action link or its
// source element cannot be resolved.
std::optional<std::string> uca_sentence(const UnsafeControlAction& uca,
                                        const Project& project);

}  // namespace stpaw
