#include "stpaw/classifier.hpp"

#include <algorithm>

namespace stpaw {

Classification classify(const AdaptationDeclaration& declaration) {
  Classification result;
  if (!declaration.affects_safety) {
    result.type = AdaptationType::T0;
    result.rationale.push_back("does not affect safety-critical functions");
    return result;
  }
  result.rationale.push_back("affects safety-critical functions");
  if (declaration.option_set == OptionSet::Runtime) {
    result.type = AdaptationType::TIII;
    result.rationale.push_back(
        "the set of adaptation options is not pre-determined; options are "
        "determined at run-time");
    return result;
  }
  result.rationale.push_back("the set of adaptation options is pre-determined");
  if (declaration.assurance == Assurance::Runtime) {
    result.type = AdaptationType::TIII;
    result.rationale.push_back(
        "safety of the options cannot be shown at design-time; it is "
        "established at run-time");
    return result;
  }
  if (declaration.assurance == Assurance::Unconditional) {
    result.type = AdaptationType::TI;
    result.rationale.push_back(
        "every option is safe regardless of the operational conditions");
    return result;
  }
  result.rationale.push_back(
      "safety of the options depends on the state of the environment or "
      "system");
  if (declaration.monotonic) {
    result.type = AdaptationType::TIIb;
    result.rationale.push_back(
        "adaptation monotonically increases the strength of assumptions");
  } else {
    result.type = AdaptationType::TII;
  }
  return result;
}

ClassificationReport check_declarations(const Project& project) {
  ClassificationReport report;
  report.project_type = AdaptationType::T0;
  bool all_rank2_are_iib = true;
  int max_rank = 0;

  for (const AdaptationDeclaration& declaration : project.adaptations) {
    Classification classification = classify(declaration);
    ClassificationRow row;
    row.adaptation = declaration.id;
    row.declared = declaration.declared_type;
    row.computed = classification.type;
    row.rationale = std::move(classification.rationale);
    row.mismatch = row.declared != row.computed;
    if (row.mismatch) {
      std::string rationale;
      for (const std::string& line : row.rationale) {
        if (!rationale.empty()) rationale += "; ";
        rationale += line;
      }
      report.findings.push_back(Finding{
          "C001", Severity::Error,
          "adaptation '" + declaration.id + "' is declared type " +
              std::string(to_string(row.declared)) + " but classifies as type " +
              std::string(to_string(row.computed)) + " (" + rationale + ")",
          declaration.span});
    }
    const int rank = type_rank(row.computed);
    if (rank > max_rank) max_rank = rank;
    if (rank == 2 && row.computed != AdaptationType::TIIb)
      all_rank2_are_iib = false;
    report.rows.push_back(std::move(row));
  }

  switch (max_rank) {
    case 0: report.project_type = AdaptationType::T0; break;
    case 1: report.project_type = AdaptationType::TI; break;
    case 2:
      report.project_type =
          all_rank2_are_iib ? AdaptationType::TIIb : AdaptationType::TII;
      break;
    default: report.project_type = AdaptationType::TIII; break;
  }
  return report;
}

}  // namespace stpaw
