#include <doctest.h>

#include "fixtures.hpp"
#include "ginv/command.hpp"
#include "ginv/document.hpp"
#include "ginv/error.hpp"

using namespace ginv;
using namespace ginv::test;

namespace {

constexpr const char* kDocA =
    R"({"rows": 3, "cols": 3, "entries": [["1","1+1i","0"],["1-1i","2","0"],["-2","1+1i","0"]]})";

CommandInputs only_a(Matrix a) { return {std::move(a), {}, {}, {}, {}, {}}; }

}  // namespace

TEST_CASE("matrix documents") {
  CHECK(parse_document(kDocA) == fixture_a());
  try {
    parse_document(R"({"rows": 1, "cols": 2, "entries": [["1", "1+j"]]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("entry (1,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document(R"({"rows": 3, "cols": 3, "entries": [["1","2","3"],["4","5","6"]]})"),
                  DimensionError);
  CHECK_THROWS_AS(parse_document(R"({"rows": 2, "cols": 2, "entries": [["1","2"],["3"]]})"), DimensionError);
  CHECK_THROWS_AS(parse_document(R"({"rows": 0, "cols": 2, "entries": []})"), DimensionError);
  CHECK_THROWS_AS(parse_document(R"({"rows": 1, "cols": 1, "entries": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"rows": 1, "cols": 1)"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"cols": 1, "entries": [["1"]]})"), ParseError);
}

TEST_CASE("matrix emission") {
  CHECK(emit_matrix(Matrix{{q(1, 9), cx(1, 1)}}) == R"({"rows": 1, "cols": 2, "entries": [["1/9", "1+1i"]]})");
  for (const Matrix& m : {fixture_a(), fixture_x(), fixture_y(), fixture_z(), fixture_n(), fixture_a_pinv()}) {
    CHECK(parse_document(emit_matrix(m)) == m);
    CHECK(emit_matrix(parse_document(emit_matrix(m))) == emit_matrix(m));
  }
}

TEST_CASE("compute weak-hgroup on A") {
  const ReportDocument doc = run_command(Command::Compute, "weak-hgroup", only_a(fixture_a()));
  CHECK(doc.ok);
  CHECK(exit_code_for(doc) == kExitOk);
  CHECK(doc.result == fixture_z());
  CHECK(doc.unique == true);
  CHECK(doc.index == 2u);
  CHECK_FALSE(doc.checks.empty());
  for (const auto& c : doc.checks) CHECK_MESSAGE(c.holds, c.name);
  CHECK_FALSE(doc.reason.has_value());
}

TEST_CASE("verify the bad candidate X/3") {
  CommandInputs in = only_a(fixture_x());
  in.candidate = q(1, 3) * fixture_x();
  const ReportDocument doc = run_command(Command::Verify, "hgroup", in);
  CHECK_FALSE(doc.ok);
  CHECK(exit_code_for(doc) == kExitDomainFailure);
  REQUIRE(doc.reason.has_value());
  CHECK(doc.reason->find("xax=x") != std::string::npos);
  CHECK_FALSE(doc.result.has_value());
}

TEST_CASE("compute group on N") {
  const ReportDocument doc = run_command(Command::Compute, "group", only_a(fixture_n()));
  CHECK_FALSE(doc.ok);
  CHECK(exit_code_for(doc) == kExitDomainFailure);
  REQUIRE(doc.reason.has_value());
  CHECK(doc.reason->find("not group invertible") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(run_command(Command::Compute, "pseudo", only_a(fixture_a())), UsageError);
  CHECK_THROWS_AS(run_command(Command::Compute, "bc", only_a(fixture_a())), UsageError);
  CHECK_THROWS_AS(run_command(Command::Verify, "mp", only_a(fixture_a())), UsageError);
}

TEST_CASE("decompose A") {
  const ReportDocument doc = run_command(Command::Decompose, "", only_a(fixture_a()));
  CHECK(doc.ok);
  CHECK_FALSE(doc.kind.has_value());
  CHECK(doc.index == 2u);
  REQUIRE(doc.parts.has_value());
  CHECK(doc.parts->core == fixture_x());
  CHECK(doc.parts->nil == fixture_y());
  CHECK(doc.parts->projector == q(1, 3) * fixture_x());
}

TEST_CASE("reports round trip and are deterministic") {
  const std::vector<std::pair<Command, std::string>> runs{
      {Command::Compute, "mp"},     {Command::Compute, "hgroup"}, {Command::Compute, "weak-hgroup"},
      {Command::Compute, "group"},  {Command::Compute, "drazin"}, {Command::Compute, "weak-mp"},
      {Command::Decompose, ""},
  };
  for (const Matrix& a : {fixture_a(), fixture_x(), fixture_y(), fixture_n(), Matrix::identity(2)}) {
    for (const auto& [cmd, kind] : runs) {
      const std::string text = emit_document(run_command(cmd, kind, only_a(a)));
      CHECK(text == emit_document(run_command(cmd, kind, only_a(a))));
      const ReportDocument back = parse_report(text);
      CHECK(emit_document(back) == text);
    }
  }
}

TEST_CASE("report layout") {
  ReportDocument doc;
  doc.command = "verify";
  doc.kind = "mp";
  doc.ok = true;
  doc.checks = {{"xax=x", true}};
  CHECK(emit_document(doc) ==
        "{\n"
        "  \"command\": \"verify\",\n"
        "  \"kind\": \"mp\",\n"
        "  \"ok\": true,\n"
        "  \"result\": null,\n"
        "  \"unique\": null,\n"
        "  \"index\": null,\n"
        "  \"parts\": null,\n"
        "  \"checks\": [\n"
        "    {\"name\": \"xax=x\", \"holds\": true}\n"
        "  ],\n"
        "  \"reason\": null\n"
        "}\n");
}
