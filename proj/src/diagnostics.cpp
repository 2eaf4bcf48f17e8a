#include "stpaw/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace stpaw {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

std::string diagnostic_code_for_rule(std::string_view rule) {
  // "R4" -> "R004", "R12" -> "R012"; stage codes are already letter+3.
  if (rule.size() >= 2 && rule.front() == 'R' &&
      std::all_of(rule.begin() + 1, rule.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    std::string digits(rule.substr(1));
    while (digits.size() < 3) digits.insert(digits.begin(), '0');
    return "R" + digits;
  }
  return std::string(rule);
}

Diagnostic to_diagnostic(const Finding& finding) {
  return Diagnostic{finding.severity, diagnostic_code_for_rule(finding.rule),
                    finding.message, finding.span};
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool has_errors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::Error; });
}

bool has_warnings(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Warning;
  });
}

namespace {

constexpr std::string_view kReset = "\033[0m";
constexpr std::string_view kBold = "\033[1m";
constexpr std::string_view kRed = "\033[31m";
constexpr std::string_view kMagenta = "\033[35m";
constexpr std::string_view kCyan = "\033[36m";
constexpr std::string_view kGreen = "\033[32m";

std::string_view severity_color(Severity severity) {
  switch (severity) {
    case Severity::Error: return kRed;
    case Severity::Warning: return kMagenta;
    case Severity::Info: return kCyan;
  }
  return kRed;
}

std::vector<std::string_view> split_lines(std::string_view source) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t nl = source.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(source.substr(pos));
      break;
    }
    lines.push_back(source.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               std::string_view source,
                               std::string_view source_file,
                               const RenderOptions& options) {
  std::vector<const Diagnostic*> order;
  order.reserve(diagnostics.size());
  for (const Diagnostic& d : diagnostics) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(),
                   [](const Diagnostic* a, const Diagnostic* b) {
                     if (a->span.file != b->span.file) return a->span.file < b->span.file;
                     if (a->span.start_line != b->span.start_line)
                       return a->span.start_line < b->span.start_line;
                     if (a->span.start_col != b->span.start_col)
                       return a->span.start_col < b->span.start_col;
                     return a->code < b->code;
                   });

  const std::vector<std::string_view> lines = split_lines(source);
  std::ostringstream out;
  for (const Diagnostic* d : order) {
    if (options.color) out << kBold;
    out << d->span.file << ':' << d->span.start_line << ':' << d->span.start_col
        << ": ";
    if (options.color) out << severity_color(d->severity);
    out << to_string(d->severity) << ' ' << d->code;
    if (options.color) out << kReset << kBold;
    out << ": " << d->message;
    if (options.color) out << kReset;
    out << '\n';

    const bool have_line = d->span.file == source_file && d->span.start_line >= 1 &&
                           static_cast<std::size_t>(d->span.start_line) <= lines.size();
    if (!have_line) continue;
    std::string_view line = lines[static_cast<std::size_t>(d->span.start_line) - 1];
    out << line << '\n';
    const int start = std::max(d->span.start_col, 1);
    int end = d->span.end_line == d->span.start_line
                  ? d->span.end_col
                  : static_cast<int>(line.size());
    end = std::max(end, start);
    if (options.color) out << kGreen;
    for (int i = 1; i < start; ++i) {
      out << (static_cast<std::size_t>(i - 1) < line.size() && line[i - 1] == '\t'
                  ? '\t'
                  : ' ');
    }
    out << '^';
    for (int i = start + 1; i <= end; ++i) out << '~';
    if (options.color) out << kReset;
    out << '\n';
  }
  return out.str();
}

}  // namespace stpaw
