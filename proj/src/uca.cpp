#include "stpaw/uca.hpp"

#include <algorithm>

namespace stpaw {
namespace {

std::string_view phrase_rendering(GuidePhrase phrase) {
  switch (phrase) {
    case GuidePhrase::Provided: return "provides";
    case GuidePhrase::NotProvided: return "does not provide";
    case GuidePhrase::TooEarlyOrTooLate: return "provides too early or too late";
    case GuidePhrase::TooLongOrStoppedTooSoon:
      return "applies too long or stops too soon";
  }
  return "provides";
}

}  // namespace

std::vector<CandidateCell> candidates(const Project& project) {
  std::vector<const Link*> actions = enumerable_actions(project);
  std::sort(actions.begin(), actions.end(), [](const Link* a, const Link* b) {
    return identifier_less(a->id, b->id);
  });

  std::vector<CandidateCell> cells;
  cells.reserve(actions.size() * kGuidePhraseCount);
  for (const Link* action : actions) {
    for (std::size_t p = 0; p < kGuidePhraseCount; ++p) {
      const GuidePhrase phrase = static_cast<GuidePhrase>(p);
      CandidateCell cell;
      cell.action = action;
      cell.phrase = phrase;
      for (const UnsafeControlAction& uca : project.ucas) {
        if (uca.action == action->id && uca.phrase == phrase)
          cell.ucas.push_back(&uca);
      }
      const NotApplicableRecord* na = nullptr;
      for (const NotApplicableRecord& record : project.na_records) {
        if (record.action == action->id && record.phrase == phrase) {
          na = &record;
          break;
        }
      }
      if (!cell.ucas.empty()) {
        cell.state = CellState::Covered;
        if (na != nullptr) cell.na_reason = na->reason;  // redundant, flagged
      } else if (na != nullptr) {
        cell.state = CellState::NotApplicable;
        cell.na_reason = na->reason;
      } else {
        cell.state = CellState::Open;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

UcaCoverage uca_coverage(const Project& project) {
  UcaCoverage result;
  result.cells = candidates(project);

  for (const CandidateCell& cell : result.cells) {
    switch (cell.state) {
      case CellState::Open:
        ++result.open;
        result.findings.push_back(Finding{
            "U001", Severity::Warning,
            "candidate (" + cell.action->id + ", " +
                std::string(to_keyword(cell.phrase)) +
                ") is unanalyzed; record a uca or justify na",
            cell.action->span});
        break;
      case CellState::Covered:
        ++result.covered;
        break;
      case CellState::NotApplicable:
        ++result.not_applicable;
        break;
    }
  }
  for (const NotApplicableRecord& record : project.na_records) {
    const Link* link = find_link(project, record.action);
    if (link == nullptr) continue;
    if (!is_enumerable(link->kind)) {
      result.findings.push_back(Finding{
          "U004", Severity::Warning,
          "na record on link '" + record.action + "' of kind " +
              std::string(to_keyword(link->kind)) +
              ", which is not an enumerable action",
          record.span});
      continue;
    }
    for (const UnsafeControlAction& uca : project.ucas) {
      if (uca.action == record.action && uca.phrase == record.phrase) {
        result.findings.push_back(Finding{
            "U002", Severity::Warning,
            "na record for (" + record.action + ", " +
                std::string(to_keyword(record.phrase)) +
                ") is redundant; the cell is covered by '" + uca.id + "'",
            record.span});
        break;
      }
    }
  }
  for (const UnsafeControlAction& uca : project.ucas) {
    const Link* link = find_link(project, uca.action);
    if (link == nullptr) continue;
    if (!is_enumerable(link->kind)) {
      result.findings.push_back(Finding{
          "U003", Severity::Error,
          "uca '" + uca.id + "' is recorded on link '" + uca.action +
              "' of kind " + std::string(to_keyword(link->kind)) +
              ", which is not an enumerable action",
          uca.span});
    }
  }
  return result;
}

std::optional<std::string> uca_sentence(const UnsafeControlAction& uca,
                                        const Project& project) {
  const Link* link = find_link(project, uca.action);
  if (link == nullptr) return std::nullopt;
  const Element* source = find_element(project, link->source);
  if (source == nullptr) return std::nullopt;

  std::string sentence = source->name.empty() ? source->id : source->name;
  sentence += ' ';
  sentence += phrase_rendering(uca.phrase);
  sentence += ' ';
  sentence += link->label.empty() ? link->id : link->label;
  if (!uca.context.empty()) {
    sentence += ' ';
    sentence += uca.context;
  }
  sentence += ", leading to [";
  std::vector<Identifier> hazards = uca.hazards;
  std::sort(hazards.begin(), hazards.end(),
            [](const Identifier& a, const Identifier& b) {
              return identifier_less(a, b);
            });
  for (std::size_t i = 0; i < hazards.size(); ++i) {
    if (i > 0) sentence += ", ";
    sentence += hazards[i];
  }
  sentence += ']';
  return sentence;
}

}  // namespace stpaw
