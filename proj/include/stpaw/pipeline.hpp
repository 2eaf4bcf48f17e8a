#pragma once

// Full analysis pipeline over a parsed project: structural validation,
// classification, obligation coverage at the computed project type, and
// candidate-matrix coverage. Obligation and matrix stages are skipped when
// structural errors exist (their findings would be noise over a broken
// structure); classification always runs.

#include <vector>

#include "stpaw/classifier.hpp"
#include "stpaw/diagnostics.hpp"
#include "stpaw/model.hpp"
#include "stpaw/obligations.hpp"
#include "stpaw/uca.hpp"

namespace stpaw {

struct Analysis {
  std::vector<Finding> structure;
  bool structure_ok = false;  // no error-severity structural findings
  ClassificationReport classification;
  std::vector<Obligation> obligations;
  ObligationCoverage obligation_coverage;
  UcaCoverage uca;

  // Every finding, in report order: structure, classification,
  // obligations, matrix.
  std::vector<Finding> all_findings() const;
};

Analysis analyze(const Project& project);

}  // namespace stpaw
