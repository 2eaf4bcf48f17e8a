#include "stpaw/cli.hpp"

#include <unistd.h>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "stpaw/parser.hpp"
#include "stpaw/pipeline.hpp"
#include "stpaw/report.hpp"
#include "stpaw/scaffold.hpp"
#include "stpaw/serializer.hpp"

namespace stpaw {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kUsage =
    "usage: stpaw [flags] <command> [args]\n"
    "\n"
    "commands:\n"
    "  init <name>            write a starter project to <name>.sas\n"
    "  check <file>...        run the full analysis and report findings\n"
    "  classify <file>...     classify each adaptation and flag mismatches\n"
    "  obligations <file>...  list analysis obligations and their status\n"
    "  ucas <file>...         show the guide-phrase candidate matrix\n"
    "  report <file>...       print the traceability report\n"
    "  fmt <file>             rewrite the file in canonical form\n"
    "\n"
    "flags:\n"
    "  --strict        treat warnings as failures\n"
    "  --format <fmt>  output format: text, md, json (report also: csv)\n"
    "  --no-color      disable colored diagnostics\n"
    "  --write         fmt: rewrite the file in place\n";

struct Options {
  bool strict = false;
  bool no_color = false;
  bool write = false;
  std::optional<std::string> format;
};

int usage_error(std::ostream& err, std::string_view message) {
  err << "stpaw: " << message << "\n" << kUsage;
  return 2;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t display_width(std::string_view text) {
  std::size_t width = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

void print_table(std::ostream& out,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(widths[i] + 2 - display_width(row[i]), ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

void print_md_table(std::ostream& out,
                    const std::vector<std::vector<std::string>>& rows) {
  bool first = true;
  for (const auto& row : rows) {
    out << '|';
    for (const std::string& cell : row) out << ' ' << cell << " |";
    out << '\n';
    if (first) {
      out << '|';
      for (std::size_t i = 0; i < row.size(); ++i) out << " --- |";
      out << '\n';
      first = false;
    }
  }
}

std::string join_ids(const std::vector<Identifier>& ids) {
  std::string text;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) text += ", ";
    text += ids[i];
  }
  return text;
}

// ---- subcommand views ----

void classify_view(const Analysis& analysis, std::ostream& out) {
  for (const ClassificationRow& row : analysis.classification.rows) {
    out << row.adaptation << ": declared=" << to_string(row.declared)
        << " computed=" << to_string(row.computed)
        << (row.mismatch ? " [MISMATCH]" : " [MATCH]") << '\n';
    for (const std::string& line : row.rationale) {
      out << "  - " << line << '\n';
    }
  }
  out << "project type: " << to_string(analysis.classification.project_type)
      << '\n';
}

std::vector<std::vector<std::string>> obligation_rows(const Analysis& analysis,
                                                      bool md) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back(md ? std::vector<std::string>{"Id", "Rule", "Element", "Status",
                                               "Linked"}
                    : std::vector<std::string>{"id", "rule", "element", "status",
                                               "linked"});
  for (const ObligationStatus& status : analysis.obligation_coverage.statuses) {
    std::string linked;
    switch (status.state) {
      case ObligationState::Addressed: linked = join_ids(status.by); break;
      case ObligationState::NotApplicable: linked = status.reason; break;
      case ObligationState::Open: break;
    }
    rows.push_back({status.obligation->id, std::string(status.obligation->rule->id),
                    status.obligation->element,
                    std::string(to_string(status.state)), std::move(linked)});
  }
  return rows;
}

void obligations_json_view(const Analysis& analysis, std::ostream& out) {
  ordered_json doc;
  doc["type"] =
      std::string(to_string(analysis.classification.project_type));
  ordered_json list = ordered_json::array();
  for (const ObligationStatus& status : analysis.obligation_coverage.statuses) {
    ordered_json entry = {
        {"id", status.obligation->id},
        {"rule", std::string(status.obligation->rule->id)},
        {"stage", std::string(to_string(status.obligation->rule->stage))},
        {"element", status.obligation->element},
        {"text", status.obligation->text},
        {"status", std::string(to_string(status.state))}};
    if (status.state == ObligationState::Addressed)
      entry["by"] = status.by;
    if (status.state == ObligationState::NotApplicable)
      entry["reason"] = status.reason;
    list.push_back(std::move(entry));
  }
  doc["obligations"] = std::move(list);
  out << doc.dump(2) << '\n';
}

std::string cell_text(const CandidateCell& cell) {
  switch (cell.state) {
    case CellState::Covered: {
      std::vector<Identifier> ids;
      ids.reserve(cell.ucas.size());
      for (const UnsafeControlAction* uca : cell.ucas) ids.push_back(uca->id);
      return join_ids(ids);
    }
    case CellState::NotApplicable: return "NA";
    case CellState::Open: return "—";
  }
  return "—";
}

std::vector<std::vector<std::string>> uca_rows(const Analysis& analysis,
                                               bool md) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{md ? "Action" : "action"};
  for (std::size_t p = 0; p < kGuidePhraseCount; ++p) {
    header.push_back(std::string(to_keyword(static_cast<GuidePhrase>(p))));
  }
  rows.push_back(std::move(header));
  const std::vector<CandidateCell>& cells = analysis.uca.cells;
  for (std::size_t i = 0; i + kGuidePhraseCount <= cells.size();
       i += kGuidePhraseCount) {
    std::vector<std::string> row{cells[i].action->id};
    for (std::size_t p = 0; p < kGuidePhraseCount; ++p) {
      row.push_back(cell_text(cells[i + p]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void ucas_json_view(const Analysis& analysis, std::ostream& out) {
  ordered_json doc;
  ordered_json cells = ordered_json::array();
  for (const CandidateCell& cell : analysis.uca.cells) {
    ordered_json entry = {{"action", cell.action->id},
                          {"phrase", std::string(to_keyword(cell.phrase))}};
    switch (cell.state) {
      case CellState::Covered: entry["state"] = "covered"; break;
      case CellState::NotApplicable: entry["state"] = "na"; break;
      case CellState::Open: entry["state"] = "open"; break;
    }
    ordered_json ids = ordered_json::array();
    for (const UnsafeControlAction* uca : cell.ucas) ids.push_back(uca->id);
    entry["ucas"] = std::move(ids);
    if (cell.state == CellState::NotApplicable) entry["reason"] = cell.na_reason;
    cells.push_back(std::move(entry));
  }
  doc["cells"] = std::move(cells);
  out << doc.dump(2) << '\n';
}

void report_text_view(const Project& project, std::ostream& out) {
  const SummaryRow row = summary(project);
  const TraceMatrix matrix = trace_matrix(project);
  out << "project: " << row.name << '\n';
  out << "type: " << to_string(row.type) << '\n';
  out << "hazards: " << row.hazards << "  ucas: " << row.ucas
      << "  scenarios: " << row.scenarios << "  mitigations: " << row.mitigations
      << '\n';
  const auto line = [&out](std::string_view label,
                           const std::vector<Identifier>& ids) {
    out << "  " << label << ':';
    if (!ids.empty()) out << ' ' << join_ids(ids);
    out << '\n';
  };
  for (const TraceRow& trace : matrix.rows) {
    out << '\n' << trace.hazard << '\n';
    line("losses", trace.losses);
    line("ucas", trace.ucas);
    line("scenarios", trace.scenarios);
    line("mitigations", trace.mitigations);
  }
  if (!matrix.orphan_ucas.empty() || !matrix.orphan_scenarios.empty() ||
      !matrix.orphan_mitigations.empty()) {
    out << "\norphans:\n";
    for (const Identifier& id : matrix.orphan_ucas) out << "  uca " << id << '\n';
    for (const Identifier& id : matrix.orphan_scenarios)
      out << "  scenario " << id << '\n';
    for (const Identifier& id : matrix.orphan_mitigations)
      out << "  mitigation " << id << '\n';
  }
}

// ---- command plumbing ----

enum class Command {
  Init,
  Check,
  Classify,
  Obligations,
  Ucas,
  Report,
  Fmt,
};

std::optional<Command> command_from(std::string_view word) {
  if (word == "init") return Command::Init;
  if (word == "check") return Command::Check;
  if (word == "classify") return Command::Classify;
  if (word == "obligations") return Command::Obligations;
  if (word == "ucas") return Command::Ucas;
  if (word == "report") return Command::Report;
  if (word == "fmt") return Command::Fmt;
  return std::nullopt;
}

int exit_code_for(const std::vector<Diagnostic>& diagnostics, bool strict) {
  if (has_errors(diagnostics)) return 1;
  if (strict && has_warnings(diagnostics)) return 1;
  return 0;
}

struct LoadedFile {
  std::string source;
  Project project;
};

// Reads and parses one file, rendering any diagnostics. Returns the
// project only when it parsed without errors; `code` carries the exit
// status contribution otherwise.
std::optional<LoadedFile> load(const std::string& path, const Options& options,
                               bool color, std::ostream& err, int& code) {
  const std::optional<std::string> source = read_file(path);
  if (!source) {
    err << "stpaw: cannot open '" << path << "'\n";
    code = std::max(code, 2);
    return std::nullopt;
  }
  ParseResult result = parse(*source, path);
  if (!result.diagnostics.empty()) {
    err << render_diagnostics(result.diagnostics, *source, path,
                              RenderOptions{color});
  }
  if (!result.project.has_value()) {
    code = std::max(code, 2);
    return std::nullopt;
  }
  if (has_errors(result.diagnostics)) {
    code = std::max(code, exit_code_for(result.diagnostics, options.strict));
    return std::nullopt;
  }
  code = std::max(code, exit_code_for(result.diagnostics, options.strict));
  return LoadedFile{std::move(*source), std::move(*result.project)};
}

int run_init(const std::vector<std::string>& files, std::ostream& out,
             std::ostream& err) {
  if (files.size() != 1) return usage_error(err, "init takes exactly one name");
  const std::string& name = files.front();
  if (name.empty()) return usage_error(err, "project name must not be empty");
  const std::string path = name + ".sas";
  if (std::filesystem::exists(path)) {
    err << "stpaw: refusing to overwrite existing file '" << path << "'\n";
    return 2;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "stpaw: cannot write '" << path << "'\n";
    return 2;
  }
  file << scaffold_source(name);
  out << "wrote " << path << '\n';
  return 0;
}

int run_fmt(const std::vector<std::string>& files, const Options& options,
            bool color, std::ostream& out, std::ostream& err) {
  if (files.size() != 1) return usage_error(err, "fmt takes exactly one file");
  const std::string& path = files.front();
  int code = 0;
  std::optional<LoadedFile> loaded = load(path, options, color, err, code);
  if (!loaded) return code;
  const std::string canonical = serialize(loaded->project);
  if (options.write) {
    if (canonical != loaded->source) {
      std::ofstream file(path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "stpaw: cannot write '" << path << "'\n";
        return 2;
      }
      file << canonical;
    }
  } else {
    out << canonical;
  }
  return code;
}

int run_analysis_command(Command command, const std::vector<std::string>& files,
                         const Options& options, bool color, std::ostream& out,
                         std::ostream& err) {
  if (files.empty()) return usage_error(err, "expected at least one file");
  const std::string format = options.format.value_or("text");
  int code = 0;
  for (const std::string& path : files) {
    std::optional<LoadedFile> loaded = load(path, options, color, err, code);
    if (!loaded) continue;
    const Analysis analysis = analyze(loaded->project);

    std::vector<Diagnostic> diagnostics;
    for (const Finding& finding : analysis.all_findings()) {
      diagnostics.push_back(to_diagnostic(finding));
    }
    if (!diagnostics.empty()) {
      err << render_diagnostics(diagnostics, loaded->source, path,
                                RenderOptions{color});
    }
    code = std::max(code, exit_code_for(diagnostics, options.strict));

    switch (command) {
      case Command::Check:
        break;
      case Command::Classify:
        classify_view(analysis, out);
        break;
      case Command::Obligations:
        if (format == "json") {
          obligations_json_view(analysis, out);
        } else if (format == "md") {
          print_md_table(out, obligation_rows(analysis, true));
        } else {
          print_table(out, obligation_rows(analysis, false));
        }
        break;
      case Command::Ucas:
        if (format == "json") {
          ucas_json_view(analysis, out);
        } else if (format == "md") {
          print_md_table(out, uca_rows(analysis, true));
        } else {
          print_table(out, uca_rows(analysis, false));
        }
        break;
      case Command::Report:
        if (format == "json") {
          out << export_project(loaded->project, ExportFormat::Json);
        } else if (format == "md") {
          out << export_project(loaded->project, ExportFormat::Markdown);
        } else if (format == "csv") {
          out << export_project(loaded->project, ExportFormat::Csv);
        } else {
          report_text_view(loaded->project, out);
        }
        break;
      case Command::Init:
      case Command::Fmt:
        break;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options options;
  std::vector<std::string> positional;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg == "--strict") {
      options.strict = true;
    } else if (arg == "--no-color") {
      options.no_color = true;
    } else if (arg == "--write") {
      options.write = true;
    } else if (arg == "--format") {
      if (i + 1 >= args.size()) return usage_error(err, "--format needs a value");
      options.format = args[++i];
    } else if (arg.rfind("--format=", 0) == 0) {
      options.format = arg.substr(9);
    } else if (arg == "--help" || arg == "-h") {
      out << kUsage;
      return 0;
    } else if (arg.size() > 1 && arg.front() == '-') {
      return usage_error(err, "unknown flag '" + arg + "'");
    } else {
      positional.push_back(arg);
    }
  }
  if (positional.empty()) return usage_error(err, "expected a command");

  const std::optional<Command> command = command_from(positional.front());
  if (!command) {
    return usage_error(err, "unknown command '" + positional.front() + "'");
  }
  const std::vector<std::string> files(positional.begin() + 1, positional.end());

  if (options.write && *command != Command::Fmt) {
    return usage_error(err, "--write only applies to fmt");
  }
  if (options.format) {
    const bool formatable = *command == Command::Obligations ||
                            *command == Command::Ucas ||
                            *command == Command::Report;
    if (!formatable) {
      return usage_error(err, "--format does not apply to this command");
    }
    const std::string& format = *options.format;
    const bool valid =
        format == "text" || format == "md" || format == "json" ||
        (format == "csv" && *command == Command::Report);
    if (!valid) {
      return usage_error(err, "unsupported format '" + format + "'");
    }
  }

  const bool color = !options.no_color && &err == &std::cerr &&
                     isatty(STDERR_FILENO) != 0;

  switch (*command) {
    case Command::Init: return run_init(files, out, err);
    case Command::Fmt: return run_fmt(files, options, color, out, err);
    default:
      return run_analysis_command(*command, files, options, color, out, err);
  }
}

}  // namespace stpaw
