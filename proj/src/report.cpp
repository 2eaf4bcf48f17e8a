#include "stpaw/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stpaw/pipeline.hpp"
#include "stpaw/uca.hpp"

namespace stpaw {
namespace {

struct NaturalLess {
  bool operator()(const Identifier& a, const Identifier& b) const {
    return identifier_less(a, b);
  }
};

void push_unique(std::vector<Identifier>& list, const Identifier& id) {
  if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
}

std::vector<Identifier> sorted_ids(std::set<Identifier, NaturalLess> ids) {
  return std::vector<Identifier>(ids.begin(), ids.end());
}

}  // namespace

TraceMatrix trace_matrix(const Project& project) {
  TraceMatrix matrix;

  std::vector<const Hazard*> hazards;
  hazards.reserve(project.hazards.size());
  for (const Hazard& hazard : project.hazards) hazards.push_back(&hazard);
  std::sort(hazards.begin(), hazards.end(), [](const Hazard* a, const Hazard* b) {
    return identifier_less(a->id, b->id);
  });

  std::set<Identifier, NaturalLess> reached_ucas;
  std::set<Identifier, NaturalLess> reached_scenarios;
  std::set<Identifier, NaturalLess> reached_mitigations;

  for (const Hazard* hazard : hazards) {
    TraceRow row;
    row.hazard = hazard->id;
    for (const Identifier& loss : hazard->leads_to) push_unique(row.losses, loss);

    std::set<Identifier, NaturalLess> row_ucas;
    for (const UnsafeControlAction& uca : project.ucas) {
      if (std::find(uca.hazards.begin(), uca.hazards.end(), hazard->id) !=
          uca.hazards.end()) {
        row_ucas.insert(uca.id);
        reached_ucas.insert(uca.id);
      }
    }
    row.ucas = sorted_ids(row_ucas);

    std::set<Identifier, NaturalLess> row_scenarios;
    for (const LossScenario& scenario : project.scenarios) {
      if (row_ucas.count(scenario.uca) > 0) {
        row_scenarios.insert(scenario.id);
        reached_scenarios.insert(scenario.id);
      }
    }
    row.scenarios = sorted_ids(row_scenarios);

    std::set<Identifier, NaturalLess> row_mitigations;
    for (const Mitigation& mitigation : project.mitigations) {
      for (const Identifier& target : mitigation.addresses) {
        if (row_ucas.count(target) > 0 || row_scenarios.count(target) > 0) {
          row_mitigations.insert(mitigation.id);
          reached_mitigations.insert(mitigation.id);
          break;
        }
      }
    }
    row.mitigations = sorted_ids(row_mitigations);
    matrix.rows.push_back(std::move(row));
  }

  std::set<Identifier, NaturalLess> orphan_ucas;
  for (const UnsafeControlAction& uca : project.ucas) {
    if (reached_ucas.count(uca.id) == 0) orphan_ucas.insert(uca.id);
  }
  matrix.orphan_ucas = sorted_ids(std::move(orphan_ucas));

  std::set<Identifier, NaturalLess> orphan_scenarios;
  for (const LossScenario& scenario : project.scenarios) {
    if (reached_scenarios.count(scenario.id) == 0)
      orphan_scenarios.insert(scenario.id);
  }
  matrix.orphan_scenarios = sorted_ids(std::move(orphan_scenarios));

  std::set<Identifier, NaturalLess> orphan_mitigations;
  for (const Mitigation& mitigation : project.mitigations) {
    if (reached_mitigations.count(mitigation.id) == 0)
      orphan_mitigations.insert(mitigation.id);
  }
  matrix.orphan_mitigations = sorted_ids(std::move(orphan_mitigations));

  return matrix;
}

SummaryRow summary(const Project& project) {
  SummaryRow row;
  row.name = project.name;
  row.type = check_declarations(project).project_type;
  row.hazards = project.hazards.size();
  row.ucas = project.ucas.size();
  row.scenarios = project.scenarios.size();
  row.mitigations = project.mitigations.size();
  return row;
}

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T, typename Key>
std::vector<const T*> sorted_view(const std::vector<T>& items, Key key) {
  std::vector<const T*> order;
  order.reserve(items.size());
  for (const T& item : items) order.push_back(&item);
  std::stable_sort(order.begin(), order.end(), [&](const T* a, const T* b) {
    return identifier_less(key(*a), key(*b));
  });
  return order;
}

ordered_json json_ids(const std::vector<Identifier>& ids) {
  ordered_json array = ordered_json::array();
  for (const Identifier& id : ids) array.push_back(id);
  return array;
}

std::string export_json(const Project& project, const Analysis& analysis) {
  ordered_json doc;
  doc["meta"] = {{"project", project.name}, {"generator", "stpaw"},
                 {"schema", 1}};

  ordered_json losses = ordered_json::array();
  for (const Loss* loss : sorted_view(project.losses,
                                      [](const Loss& l) { return l.id; })) {
    losses.push_back({{"id", loss->id}, {"description", loss->description}});
  }
  doc["losses"] = std::move(losses);

  ordered_json hazards = ordered_json::array();
  for (const Hazard* hazard : sorted_view(project.hazards,
                                          [](const Hazard& h) { return h.id; })) {
    hazards.push_back({{"id", hazard->id},
                       {"description", hazard->description},
                       {"leads_to", json_ids(hazard->leads_to)}});
  }
  doc["hazards"] = std::move(hazards);

  ordered_json elements = ordered_json::array();
  for (const Element* element : sorted_view(
           project.elements, [](const Element& e) { return e.id; })) {
    ordered_json entry = {{"id", element->id},
                          {"role", std::string(to_keyword(element->role))},
                          {"boundary", std::string(to_keyword(element->boundary))},
                          {"name", element->name}};
    if (element->models) {
      ordered_json kinds = ordered_json::array();
      if (element->models->managed_system) kinds.push_back("managed_system");
      if (element->models->environment) kinds.push_back("environment");
      if (element->models->goals) kinds.push_back("goals");
      if (element->models->working) kinds.push_back("working");
      entry["models"] = std::move(kinds);
    }
    elements.push_back(std::move(entry));
  }
  doc["elements"] = std::move(elements);

  ordered_json links = ordered_json::array();
  for (const Link* link : sorted_view(project.links,
                                      [](const Link& l) { return l.id; })) {
    links.push_back({{"id", link->id},
                     {"kind", std::string(to_keyword(link->kind))},
                     {"from", link->source},
                     {"to", link->target},
                     {"label", link->label}});
  }
  doc["links"] = std::move(links);

  ordered_json adaptations = ordered_json::array();
  for (const ClassificationRow& row : analysis.classification.rows) {
    const AdaptationDeclaration* decl = nullptr;
    for (const AdaptationDeclaration& candidate : project.adaptations) {
      if (candidate.id == row.adaptation) {
        decl = &candidate;
        break;
      }
    }
    if (decl == nullptr) continue;
    adaptations.push_back(
        {{"id", decl->id},
         {"affects_safety", decl->affects_safety},
         {"option_set", std::string(to_keyword(decl->option_set))},
         {"assurance", std::string(to_keyword(decl->assurance))},
         {"monotonic", decl->monotonic},
         {"declared_type", std::string(to_string(decl->declared_type))},
         {"computed_type", std::string(to_string(row.computed))}});
  }
  std::sort(adaptations.begin(), adaptations.end(),
            [](const ordered_json& a, const ordered_json& b) {
              return identifier_less(a["id"].get_ref<const std::string&>(),
                                     b["id"].get_ref<const std::string&>());
            });
  doc["adaptations"] = std::move(adaptations);

  ordered_json ucas = ordered_json::array();
  for (const UnsafeControlAction* uca : sorted_view(
           project.ucas, [](const UnsafeControlAction& u) { return u.id; })) {
    ordered_json entry = {{"id", uca->id},
                          {"action", uca->action},
                          {"phrase", std::string(to_keyword(uca->phrase))},
                          {"context", uca->context},
                          {"hazards", json_ids(uca->hazards)}};
    if (std::optional<std::string> sentence = uca_sentence(*uca, project)) {
      entry["sentence"] = *sentence;
    }
    ucas.push_back(std::move(entry));
  }
  doc["ucas"] = std::move(ucas);

  ordered_json na_records = ordered_json::array();
  {
    std::vector<const NotApplicableRecord*> order;
    for (const NotApplicableRecord& record : project.na_records)
      order.push_back(&record);
    std::stable_sort(order.begin(), order.end(),
                     [](const NotApplicableRecord* a, const NotApplicableRecord* b) {
                       if (a->action != b->action)
                         return identifier_less(a->action, b->action);
                       return a->phrase < b->phrase;
                     });
    for (const NotApplicableRecord* record : order) {
      na_records.push_back({{"action", record->action},
                            {"phrase", std::string(to_keyword(record->phrase))},
                            {"reason", record->reason}});
    }
  }
  doc["na_records"] = std::move(na_records);

  ordered_json scenarios = ordered_json::array();
  for (const LossScenario* scenario : sorted_view(
           project.scenarios, [](const LossScenario& s) { return s.id; })) {
    ordered_json factors = ordered_json::array();
    for (const std::string& factor : scenario->factors) factors.push_back(factor);
    scenarios.push_back({{"id", scenario->id},
                         {"uca", scenario->uca},
                         {"factors", std::move(factors)},
                         {"text", scenario->narrative}});
  }
  doc["scenarios"] = std::move(scenarios);

  ordered_json mitigations = ordered_json::array();
  for (const Mitigation* mitigation : sorted_view(
           project.mitigations, [](const Mitigation& m) { return m.id; })) {
    mitigations.push_back({{"id", mitigation->id},
                           {"statement", mitigation->statement},
                           {"addresses", json_ids(mitigation->addresses)}});
  }
  doc["mitigations"] = std::move(mitigations);

  ordered_json obligations = ordered_json::array();
  {
    std::vector<const Obligation*> order;
    for (const Obligation& obligation : analysis.obligations)
      order.push_back(&obligation);
    std::sort(order.begin(), order.end(),
              [](const Obligation* a, const Obligation* b) {
                return identifier_less(a->id, b->id);
              });
    for (const Obligation* obligation : order) {
      obligations.push_back(
          {{"id", obligation->id},
           {"rule", std::string(obligation->rule->id)},
           {"stage", std::string(to_string(obligation->rule->stage))},
           {"element", obligation->element},
           {"text", obligation->text}});
    }
  }
  doc["obligations"] = std::move(obligations);

  ordered_json obligation_status = ordered_json::array();
  {
    std::vector<const ObligationStatus*> order;
    for (const ObligationStatus& status : analysis.obligation_coverage.statuses)
      order.push_back(&status);
    std::sort(order.begin(), order.end(),
              [](const ObligationStatus* a, const ObligationStatus* b) {
                return identifier_less(a->obligation->id, b->obligation->id);
              });
    for (const ObligationStatus* status : order) {
      ordered_json entry = {{"id", status->obligation->id},
                            {"state", std::string(to_string(status->state))}};
      if (status->state == ObligationState::Addressed) {
        entry["by"] = json_ids(status->by);
      }
      if (status->state == ObligationState::NotApplicable) {
        entry["reason"] = status->reason;
      }
      obligation_status.push_back(std::move(entry));
    }
  }
  doc["obligation_status"] = std::move(obligation_status);

  // Spans are omitted and ordering is content-based so the export does not
  // change when statements are reordered in the source file.
  ordered_json findings = ordered_json::array();
  {
    std::vector<Finding> all = analysis.all_findings();
    std::sort(all.begin(), all.end(), [](const Finding& a, const Finding& b) {
      if (a.rule != b.rule) return a.rule < b.rule;
      return a.message < b.message;
    });
    for (const Finding& finding : all) {
      findings.push_back({{"rule", finding.rule},
                          {"severity", std::string(to_string(finding.severity))},
                          {"message", finding.message}});
    }
  }
  doc["findings"] = std::move(findings);

  const SummaryRow row = summary(project);
  doc["summary"] = {{"name", row.name},
                    {"type", std::string(to_string(row.type))},
                    {"hazards", row.hazards},
                    {"ucas", row.ucas},
                    {"scenarios", row.scenarios},
                    {"mitigations", row.mitigations}};

  return doc.dump(2) + "\n";
}

std::string join_ids(const std::vector<Identifier>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  return out;
}

std::string export_md(const Project& project) {
  const SummaryRow row = summary(project);
  const TraceMatrix matrix = trace_matrix(project);
  std::ostringstream out;
  out << "# " << (project.name.empty() ? "(unnamed)" : project.name) << "\n\n";
  out << "## Summary\n\n";
  out << "| System | Type | Hazards | UCAs | Scenarios | Mitigations |\n";
  out << "| --- | --- | --- | --- | --- | --- |\n";
  out << "| " << row.name << " | " << to_string(row.type) << " | "
      << row.hazards << " | " << row.ucas << " | " << row.scenarios << " | "
      << row.mitigations << " |\n";
  out << "\n## Traceability\n\n";
  out << "| Hazard | Losses | UCAs | Scenarios | Mitigations |\n";
  out << "| --- | --- | --- | --- | --- |\n";
  for (const TraceRow& trace : matrix.rows) {
    out << "| " << trace.hazard << " | " << join_ids(trace.losses) << " | "
        << join_ids(trace.ucas) << " | " << join_ids(trace.scenarios) << " | "
        << join_ids(trace.mitigations) << " |\n";
  }
  if (!matrix.orphan_ucas.empty() || !matrix.orphan_scenarios.empty() ||
      !matrix.orphan_mitigations.empty()) {
    out << "\n## Orphans\n\n";
    for (const Identifier& id : matrix.orphan_ucas) out << "- uca " << id << "\n";
    for (const Identifier& id : matrix.orphan_scenarios)
      out << "- scenario " << id << "\n";
    for (const Identifier& id : matrix.orphan_mitigations)
      out << "- mitigation " << id << "\n";
  }
  return out.str();
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string export_csv(const Project& project) {
  using Pair = std::pair<Identifier, Identifier>;
  const auto emit = [](std::ostringstream& out, std::string_view header,
                       std::vector<Pair> pairs) {
    out << header << "\n";
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.first != b.first) return identifier_less(a.first, b.first);
      return identifier_less(a.second, b.second);
    });
    for (const Pair& pair : pairs) {
      out << csv_field(pair.first) << ',' << csv_field(pair.second) << "\n";
    }
  };

  std::ostringstream out;
  std::vector<Pair> hazard_uca;
  for (const UnsafeControlAction& uca : project.ucas) {
    for (const Identifier& hazard : uca.hazards) {
      hazard_uca.emplace_back(hazard, uca.id);
    }
  }
  emit(out, "hazard,uca", std::move(hazard_uca));
  out << "\n";

  std::vector<Pair> uca_scenario;
  for (const LossScenario& scenario : project.scenarios) {
    uca_scenario.emplace_back(scenario.uca, scenario.id);
  }
  emit(out, "uca,scenario", std::move(uca_scenario));
  out << "\n";

  std::vector<Pair> item_mitigation;
  for (const Mitigation& mitigation : project.mitigations) {
    for (const Identifier& target : mitigation.addresses) {
      item_mitigation.emplace_back(target, mitigation.id);
    }
  }
  emit(out, "item,mitigation", std::move(item_mitigation));
  return out.str();
}

}  // namespace

std::string export_project(const Project& project, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return export_json(project, analyze(project));
    case ExportFormat::Markdown: return export_md(project);
    case ExportFormat::Csv: return export_csv(project);
  }
  return {};
}

}  // namespace stpaw
