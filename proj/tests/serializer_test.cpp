#include "doctest.h"

#include "stpaw/parser.hpp"
#include "stpaw/scaffold.hpp"
#include "stpaw/serializer.hpp"

using namespace stpaw;

namespace {

Project parsed(std::string_view source) {
  ParseResult result = parse(source, "t.sas");
  REQUIRE(result.ok());
  return std::move(*result.project);
}

}  // namespace

TEST_CASE("empty project serializes to the header line only") {
  Project project;
  project.name = "Empty";
  CHECK(serialize(project) == "project \"Empty\"\n");
}

TEST_CASE("entities are emitted in natural id order with section breaks") {
  const Project project = parsed(
      "project \"Order\"\n"
      "loss L2 \"b\"\n"
      "loss L1 \"a\"\n"
      "hazard H10 \"y\" leads_to [L1]\n"
      "hazard H2 \"x\" leads_to [L2, L1]\n");
  const std::string text = serialize(project);
  CHECK(text ==
        "project \"Order\"\n"
        "\n"
        "loss L1 \"a\"\n"
        "loss L2 \"b\"\n"
        "\n"
        "hazard H2 \"x\" leads_to [L2, L1]\n"
        "hazard H10 \"y\" leads_to [L1]\n");
}

TEST_CASE("strings are escaped") {
  Project project;
  project.name = "with \"quotes\" and \\slash";
  CHECK(serialize(project) ==
        "project \"with \\\"quotes\\\" and \\\\slash\"\n");
}

TEST_CASE("serialization is a fixpoint under reparsing") {
  const std::string scaffold = scaffold_source("Fix");
  const std::string once = serialize(parsed(scaffold));
  const std::string twice = serialize(parsed(once));
  CHECK(once == scaffold);
  CHECK(twice == once);
}

TEST_CASE("statement order does not affect canonical output") {
  const char* forward =
      "project \"R\"\n"
      "loss L1 \"a\"\n"
      "hazard H1 \"h\" leads_to [L1]\n"
      "element C role Controller in managed name \"c\"\n"
      "element A role Actuator in managed name \"a\"\n"
      "link CA1 kind ControlAction from C to A label \"x\"\n"
      "uca U1 on CA1 phrase provided context \"ctx\" hazards [H1]\n"
      "na on CA1 phrase not_provided reason \"ok\"\n";
  const char* shuffled =
      "project \"R\"\n"
      "na on CA1 phrase not_provided reason \"ok\"\n"
      "element A role Actuator in managed name \"a\"\n"
      "uca U1 on CA1 phrase provided context \"ctx\" hazards [H1]\n"
      "link CA1 kind ControlAction from C to A label \"x\"\n"
      "hazard H1 \"h\" leads_to [L1]\n"
      "element C role Controller in managed name \"c\"\n"
      "loss L1 \"a\"\n";
  CHECK(serialize(parsed(forward)) == serialize(parsed(shuffled)));
}

TEST_CASE("na records sort by action then phrase order") {
  const Project project = parsed(
      "project \"N\"\n"
      "element C role Controller in managed name \"c\"\n"
      "link CA2 kind ControlAction from C to C label \"x\"\n"
      "link CA10 kind ControlAction from C to C label \"y\"\n"
      "na on CA10 phrase provided reason \"r\"\n"
      "na on CA2 phrase too_early_or_too_late reason \"r\"\n"
      "na on CA2 phrase provided reason \"r\"\n");
  const std::string text = serialize(project);
  const auto first = text.find("na on CA2 phrase provided");
  const auto second = text.find("na on CA2 phrase too_early_or_too_late");
  const auto third = text.find("na on CA10 phrase provided");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  REQUIRE(third != std::string::npos);
  CHECK(first < second);
  CHECK(second < third);
}

TEST_CASE("reference lists keep declaration order") {
  const Project project = parsed(
      "project \"K\"\n"
      "loss L1 \"a\"\n"
      "loss L2 \"b\"\n"
      "hazard H1 \"h\" leads_to [L2, L1]\n");
  CHECK(serialize(project).find("leads_to [L2, L1]") != std::string::npos);
}
