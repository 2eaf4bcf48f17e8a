#pragma once

// Reporting surfaces: traceability matrix, one-line analysis summary, and
// whole-project export in json, markdown, or csv. All output is
// deterministic for a given project.

#include <string>
#include <vector>

#include "stpaw/model.hpp"

namespace stpaw {

// One row per hazard: the losses it leads to, the UCAs naming it, the
// scenarios for those UCAs, and the mitigations addressing those UCAs or
// scenarios. Orphans collect entities that never reach a hazard.
struct TraceRow {
  Identifier hazard;
  std::vector<Identifier> losses;
  std::vector<Identifier> ucas;
  std::vector<Identifier> scenarios;
  std::vector<Identifier> mitigations;
};

struct TraceMatrix {
  std::vector<TraceRow> rows;  // hazard id order (natural)
  std::vector<Identifier> orphan_ucas;        // no hazard resolves
  std::vector<Identifier> orphan_scenarios;   // uca does not resolve
  std::vector<Identifier> orphan_mitigations; // nothing addressed resolves
};

TraceMatrix trace_matrix(const Project& project);

// Summary row: system name, project adaptation type, and entity counts.
struct SummaryRow {
  std::string name;
  AdaptationType type = AdaptationType::T0;
  std::size_t hazards = 0;
  std::size_t ucas = 0;
  std::size_t scenarios = 0;
  std::size_t mitigations = 0;
};

SummaryRow summary(const Project& project);

enum class ExportFormat : std::uint8_t { Json, Markdown, Csv };

// Full-project export. Byte-identical across runs and across semantically
// equal projects (statement order in the source never matters).
std::string export_project(const Project& project, ExportFormat format);

}  // namespace stpaw
