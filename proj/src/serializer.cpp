#include "stpaw/serializer.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace stpaw {
namespace {

std::string quoted(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

template <typename T, typename Key>
std::vector<const T*> sorted_by(const std::vector<T>& items, Key key) {
  std::vector<const T*> order;
  order.reserve(items.size());
  for (const T& item : items) order.push_back(&item);
  std::stable_sort(order.begin(), order.end(), [&](const T* a, const T* b) {
    return identifier_less(key(*a), key(*b));
  });
  return order;
}

void write_list(std::ostringstream& out, const std::vector<Identifier>& ids) {
  out << '[';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ", ";
    out << ids[i];
  }
  out << ']';
}

void write_factor_list(std::ostringstream& out,
                       const std::vector<std::string>& names) {
  out << '[';
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out << ", ";
    out << names[i];
  }
  out << ']';
}

}  // namespace

std::string serialize(const Project& project) {
  std::ostringstream out;
  out << "project " << quoted(project.name) << '\n';

  const auto id_of = [](const auto& entity) -> std::string_view {
    return entity.id;
  };

  if (!project.losses.empty()) {
    out << '\n';
    for (const Loss* loss : sorted_by(project.losses, id_of)) {
      out << "loss " << loss->id << ' ' << quoted(loss->description) << '\n';
    }
  }

  if (!project.hazards.empty()) {
    out << '\n';
    for (const Hazard* hazard : sorted_by(project.hazards, id_of)) {
      out << "hazard " << hazard->id << ' ' << quoted(hazard->description)
          << " leads_to ";
      write_list(out, hazard->leads_to);
      out << '\n';
    }
  }

  if (!project.factor_extensions.empty()) {
    out << '\n';
    for (const FactorDeclaration* factor :
         sorted_by(project.factor_extensions, id_of)) {
      out << "factor " << factor->id << ' ' << quoted(factor->description)
          << '\n';
    }
  }

  if (!project.elements.empty()) {
    out << '\n';
    for (const Element* element : sorted_by(project.elements, id_of)) {
      out << "element " << element->id << " role " << to_keyword(element->role)
          << " in " << to_keyword(element->boundary) << " name "
          << quoted(element->name);
      if (element->models) {
        std::vector<std::string_view> kinds;
        if (element->models->managed_system) kinds.push_back("managed_system");
        if (element->models->environment) kinds.push_back("environment");
        if (element->models->goals) kinds.push_back("goals");
        if (element->models->working) kinds.push_back("working");
        if (!kinds.empty()) {
          out << " models {";
          for (std::size_t i = 0; i < kinds.size(); ++i) {
            if (i > 0) out << ", ";
            out << kinds[i];
          }
          out << '}';
        }
      }
      out << '\n';
    }
  }

  if (!project.links.empty()) {
    out << '\n';
    for (const Link* link : sorted_by(project.links, id_of)) {
      out << "link " << link->id << " kind " << to_keyword(link->kind)
          << " from " << link->source << " to " << link->target << " label "
          << quoted(link->label) << '\n';
    }
  }

  if (!project.adaptations.empty()) {
    out << '\n';
    for (const AdaptationDeclaration* adaptation :
         sorted_by(project.adaptations, id_of)) {
      out << "adaptation " << adaptation->id << " affects_safety "
          << (adaptation->affects_safety ? "true" : "false") << " option_set "
          << to_keyword(adaptation->option_set) << " assurance "
          << to_keyword(adaptation->assurance) << " monotonic "
          << (adaptation->monotonic ? "true" : "false") << " declared_type "
          << to_string(adaptation->declared_type) << '\n';
    }
  }

  if (!project.ucas.empty()) {
    out << '\n';
    for (const UnsafeControlAction* uca : sorted_by(project.ucas, id_of)) {
      out << "uca " << uca->id << " on " << uca->action << " phrase "
          << to_keyword(uca->phrase) << " context " << quoted(uca->context)
          << " hazards ";
      write_list(out, uca->hazards);
      out << '\n';
    }
  }

  if (!project.na_records.empty()) {
    out << '\n';
    std::vector<const NotApplicableRecord*> na_order;
    na_order.reserve(project.na_records.size());
    for (const NotApplicableRecord& record : project.na_records)
      na_order.push_back(&record);
    std::stable_sort(na_order.begin(), na_order.end(),
                     [](const NotApplicableRecord* a, const NotApplicableRecord* b) {
                       if (a->action != b->action)
                         return identifier_less(a->action, b->action);
                       return a->phrase < b->phrase;
                     });
    for (const NotApplicableRecord* record : na_order) {
      out << "na on " << record->action << " phrase "
          << to_keyword(record->phrase) << " reason " << quoted(record->reason)
          << '\n';
    }
  }

  if (!project.scenarios.empty()) {
    out << '\n';
    for (const LossScenario* scenario : sorted_by(project.scenarios, id_of)) {
      out << "scenario " << scenario->id << " for " << scenario->uca
          << " factors ";
      write_factor_list(out, scenario->factors);
      out << " text " << quoted(scenario->narrative) << '\n';
    }
  }

  if (!project.mitigations.empty()) {
    out << '\n';
    for (const Mitigation* mitigation : sorted_by(project.mitigations, id_of)) {
      out << "mitigation " << mitigation->id << ' '
          << quoted(mitigation->statement) << " addresses ";
      write_list(out, mitigation->addresses);
      out << '\n';
    }
  }

  if (!project.obligation_responses.empty()) {
    out << '\n';
    const auto responses = sorted_by(
        project.obligation_responses,
        [](const ObligationResponse& r) -> std::string_view {
          return r.obligation_id;
        });
    for (const ObligationResponse* response : responses) {
      out << "obligation_response " << response->obligation_id << " status "
          << (response->status == ResponseStatus::Addressed ? "addressed" : "na");
      if (!response->by.empty()) {
        out << " by ";
        write_list(out, response->by);
      }
      if (!response->reason.empty()) {
        out << " reason " << quoted(response->reason);
      }
      out << '\n';
    }
  }

  return out.str();
}

}  // namespace stpaw
