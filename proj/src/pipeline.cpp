#include "stpaw/pipeline.hpp"

#include "stpaw/validator.hpp"

namespace stpaw {

std::vector<Finding> Analysis::all_findings() const {
  std::vector<Finding> all;
  all.reserve(structure.size() + classification.findings.size() +
              obligation_coverage.findings.size() + uca.findings.size());
  all.insert(all.end(), structure.begin(), structure.end());
  all.insert(all.end(), classification.findings.begin(),
             classification.findings.end());
  all.insert(all.end(), obligation_coverage.findings.begin(),
             obligation_coverage.findings.end());
  all.insert(all.end(), uca.findings.begin(), uca.findings.end());
  return all;
}

Analysis analyze(const Project& project) {
  Analysis analysis;
  analysis.structure = validate_structure(project);
  analysis.structure_ok = !has_errors(analysis.structure);
  analysis.classification = check_declarations(project);
  if (analysis.structure_ok) {
    analysis.obligations =
        generate(project, analysis.classification.project_type);
    analysis.obligation_coverage = coverage(project, analysis.obligations);
    analysis.uca = uca_coverage(project);
  }
  return analysis;
}

}  // namespace stpaw
