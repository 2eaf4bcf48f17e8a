#include "doctest.h"

#include "stpaw/diagnostics.hpp"

using namespace stpaw;

TEST_CASE("rule ids become zero-padded codes") {
  CHECK(diagnostic_code_for_rule("R4") == "R004");
  CHECK(diagnostic_code_for_rule("R11") == "R011");
  CHECK(diagnostic_code_for_rule("C001") == "C001");
  CHECK(diagnostic_code_for_rule("O002") == "O002");
  CHECK(diagnostic_code_for_rule("U001") == "U001");
}

TEST_CASE("finding converts to diagnostic") {
  Finding finding;
  finding.rule = "R9";
  finding.severity = Severity::Error;
  finding.message = "bad link";
  finding.span = SourceSpan{"f.sas", 3, 1, 3, 10};
  const Diagnostic diagnostic = to_diagnostic(finding);
  CHECK(diagnostic.code == "R009");
  CHECK(diagnostic.severity == Severity::Error);
  CHECK(diagnostic.message == "bad link");
  CHECK(diagnostic.span.start_line == 3);
}

TEST_CASE("severity predicates") {
  std::vector<Diagnostic> diagnostics;
  CHECK_FALSE(has_errors(diagnostics));
  diagnostics.push_back(
      Diagnostic{Severity::Warning, "U001", "w", SourceSpan{}});
  CHECK_FALSE(has_errors(diagnostics));
  CHECK(has_warnings(diagnostics));
  diagnostics.push_back(Diagnostic{Severity::Error, "R001", "e", SourceSpan{}});
  CHECK(has_errors(diagnostics));
}

TEST_CASE("render format and caret width") {
  const std::string source = "project \"P\"\nloss L1 \"x\"\n";
  const std::vector<Diagnostic> diagnostics = {
      Diagnostic{Severity::Error, "P003", "duplicate identifier 'L1'",
                 SourceSpan{"f.sas", 2, 6, 2, 7}},
  };
  const std::string text =
      render_diagnostics(diagnostics, source, "f.sas", RenderOptions{false});
  CHECK(text ==
        "f.sas:2:6: error P003: duplicate identifier 'L1'\n"
        "loss L1 \"x\"\n"
        "     ^~\n");
}

TEST_CASE("render sorts by position") {
  const std::string source = "aaaa\nbbbb\n";
  const std::vector<Diagnostic> diagnostics = {
      Diagnostic{Severity::Warning, "U001", "later", SourceSpan{"f", 2, 1, 2, 1}},
      Diagnostic{Severity::Error, "R001", "earlier", SourceSpan{"f", 1, 1, 1, 1}},
  };
  const std::string text =
      render_diagnostics(diagnostics, source, "f", RenderOptions{false});
  CHECK(text.find("earlier") < text.find("later"));
}

TEST_CASE("render preserves tabs in the caret line") {
  const std::string source = "\tloss L1 \"x\"\n";
  const std::vector<Diagnostic> diagnostics = {
      Diagnostic{Severity::Error, "P005", "m", SourceSpan{"f", 1, 2, 1, 5}},
  };
  const std::string text =
      render_diagnostics(diagnostics, source, "f", RenderOptions{false});
  // the indent mirrors the tab so the caret lines up in a terminal
  CHECK(text.find("\t^~~~") != std::string::npos);
}

TEST_CASE("no source excerpt for diagnostics from another file") {
  const std::vector<Diagnostic> diagnostics = {
      Diagnostic{Severity::Error, "P005", "m", SourceSpan{"other", 1, 1, 1, 1}},
  };
  const std::string text =
      render_diagnostics(diagnostics, "content\n", "f", RenderOptions{false});
  CHECK(text == "other:1:1: error P005: m\n");
}

TEST_CASE("color rendering wraps severity and location") {
  const std::vector<Diagnostic> diagnostics = {
      Diagnostic{Severity::Error, "R001", "m", SourceSpan{"f", 1, 1, 1, 1}},
  };
  const std::string plain =
      render_diagnostics(diagnostics, "x\n", "f", RenderOptions{false});
  const std::string color =
      render_diagnostics(diagnostics, "x\n", "f", RenderOptions{true});
  CHECK(plain.find('\x1b') == std::string::npos);
  CHECK(color.find('\x1b') != std::string::npos);
}
