#pragma once

// Diagnostics and findings. Diagnostics are the user-facing surface
// (file:line:col, code, caret rendering); findings are the analysis-facing
// one (rule id plus message). Findings convert to diagnostics for output.

#include <string>
#include <string_view>
#include <vector>

#include "stpaw/model.hpp"

namespace stpaw {

enum class Severity : std::uint8_t { Error, Warning, Info };

std::string_view to_string(Severity severity);  // "error", "warning", "info"

// code: one letter + three digits ("P003", "R004", "C001", "O001", "U002").
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;
};

// rule: catalog ids ("R1".."R12") or stage codes ("C001", "O001".."O004",
// "U001".."U004").
struct Finding {
  std::string rule;
  Severity severity = Severity::Error;
  std::string message;
  SourceSpan span;
};

// "R4" pads to code "R004"; stage codes pass through unchanged.
Diagnostic to_diagnostic(const Finding& finding);

std::string diagnostic_code_for_rule(std::string_view rule);

bool has_errors(const std::vector<Diagnostic>& diagnostics);
bool has_errors(const std::vector<Finding>& findings);
bool has_warnings(const std::vector<Diagnostic>& diagnostics);

struct RenderOptions {
  bool color = false;
};

// One block per diagnostic: "<file>:<line>:<col>: <severity> <code>: <msg>",
// the source line, and a caret underline covering the span. Blocks are
// sorted by (file, line, col, code). `source` is the text of the file the
// spans refer to; diagnostics for other files render without source lines.
std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               std::string_view source,
                               std::string_view source_file,
                               const RenderOptions& options = {});

}  // namespace stpaw
