#pragma once

// Parser for the line-oriented project DSL. Statements are keyword-led and
// newline-terminated (optional trailing semicolon); `//` starts a comment.
// The parser recovers at line granularity: a malformed statement yields one
// diagnostic and parsing resumes on the next line. Cross-references are
// resolved in a post-pass so declaration order never matters.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stpaw/diagnostics.hpp"
#include "stpaw/model.hpp"

namespace stpaw {

// `project` is set whenever a structurally usable model could be built,
// even with diagnostics present. It is empty only for unrecoverable input
// (nothing parseable at all is still usable: an empty project).
struct ParseResult {
  std::optional<Project> project;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return project.has_value() && !has_errors(diagnostics); }
};

ParseResult parse(std::string_view source, std::string file_name);

// Convenience wrapper; reads the file, then parses. Unreadable files yield
// no project and a single diagnostic with an empty span.
ParseResult parse_file(const std::string& path);

}  // namespace stpaw
