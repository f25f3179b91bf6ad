#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "jlcert/bfile.hpp"
#include "jlcert/io.hpp"
#include "support.hpp"

using namespace jlcert;
using testsupport::data_path;

TEST_CASE("parse_bfile format contract") {
  BFile b = parse_bfile("# comment\n0 1\n1 3\n2 2\n");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[1] == std::make_pair(1L, BigInt(3)));
  CHECK_THROWS_AS(parse_bfile("0 1\n2 3\n"), BFileFormatError);
  BFile loose = parse_bfile("\n  # indented comment\r\n5\t\t 10\r\n6    -11\n\n");
  REQUIRE(loose.entries.size() == 2);
  CHECK(loose.entries[1].second == -11);
  CHECK(parse_bfile("").entries.empty());
  CHECK(parse_bfile("1 123456789012345678901234567890\n").entries[0].second ==
        BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse_bfile(text);
    } catch (const BFileParseError& e) {
      return e.line();
    }
    return -1L;
  };
  CHECK(line_of("# c\n1 2\n2 x\n") == 3);
  CHECK(line_of("1\n") == 1);
  CHECK(line_of("1 2 3\n") == 1);
  CHECK(line_of("a 2\n") == 1);
}

TEST_CASE("ingest_bfile derives the id from the file name") {
  BFile b = ingest_bfile(data_path("b245962.txt"));
  CHECK(b.id == "A245962");
  CHECK(b.entries.size() == 99);
  CHECK_THROWS(ingest_bfile(data_path("does_not_exist.txt")));
}

TEST_CASE("A245962 fixture aligns and matches") {
  BFile b = ingest_bfile(data_path("b245962.txt"));
  std::vector<long> head;
  for (std::size_t i = 0; i < 8; ++i) head.push_back(b.entries[i].second.get_si());
  CHECK(head == std::vector<long>{1, 3, 2, 4, 3, 7, 8, 2});
  Alignment a = align_jl(b);
  CHECK(a.first_row == 1);
  CHECK(a.score == 20);
  Report r = compare_oeis(b, "A245962");
  CHECK(r.status() == Status::Verified);
  CHECK(r.find("oeis.A245962.values")->points_checked == 99);
}

TEST_CASE("truncated and shifted fixtures") {
  Report r = compare_oeis(ingest_bfile(data_path("b245962_short.txt")), "A245962");
  CHECK(r.status() == Status::Verified);
  CHECK(r.find("oeis.A245962.values")->points_checked == 10);
  // prepending row 0 = [2] shifts the alignment
  BFile shifted = parse_bfile("0 2\n" + testsupport::slurp(data_path("b245962_short.txt")));
  CHECK(shifted.entries.front().first == 0);
  CHECK(align_jl(shifted).first_row == 0);
}

TEST_CASE("a fault is reported at its exact index") {
  Report r = compare_oeis(ingest_bfile(data_path("b245962_fault.txt")), "A245962");
  CHECK(r.status() == Status::Violation);
  const CheckResult* v = r.find("oeis.A245962.values");
  REQUIRE(v->failures.size() == 1);
  CHECK(v->failures[0].find("index 43:") == 0);
  CHECK(v->failures[0].find("JL(12,1)") != std::string::npos);
}

TEST_CASE("alignment fails on unrelated data") {
  CHECK_THROWS_AS(align_jl(parse_bfile("0 5\n1 5\n2 5\n3 5\n")), AlignmentError);
  CHECK_THROWS_AS(align_jl(BFile{}), AlignmentError);
  CHECK_THROWS_AS(compare_oeis(parse_bfile("0 1\n"), "A000045"), DomainError);
}

TEST_CASE("row layouts") {
  std::vector<BigInt> full{1, 1, 1, 2, 2, 1, 3, 5, 3, 1, 5, 10};
  auto rows = split_rows(full, RowPattern::Full);
  CHECK(rows.size() == 4);
  CHECK(rows[3] == std::vector<BigInt>{3, 5, 3, 1});
  CHECK(detect_row_pattern(full) == RowPattern::Full);
  auto half = split_rows({1, 3, 2, 4, 3, 7, 8, 2}, RowPattern::HalfFromOne);
  CHECK(half.size() == 4);
  CHECK(row_pattern_from_string("half") == RowPattern::Half);
  CHECK_THROWS_AS(row_pattern_from_string("diagonal"), DomainError);
}

TEST_CASE("empirical row scans of the companion triangles") {
  for (std::string id : {"A037027", "A073370"}) {
    BFile b = ingest_bfile(data_path("b" + id.substr(1) + ".txt"));
    Report r = compare_oeis(b, id);
    CHECK(r.status() == Status::Verified);
    CHECK(r.checks.front().method == Method::Empirical);
    CHECK(r.checks.front().region.find("41 complete row(s)") == 0);
  }
  // a broken row is caught
  BFile b = parse_bfile("0 1\n1 1\n2 1\n3 1\n4 0\n5 1\n");
  Report r = compare_oeis(b, "A037027", RowPattern::Full);
  CHECK(r.status() == Status::Violation);
}

TEST_CASE("table CSV and JSON") {
  JLTable t = build_table(18, Engine::RecColumns);
  std::ostringstream csv;
  write_table_csv(csv, t);
  CHECK(csv.str() == testsupport::slurp(data_path("table1.csv")));

  std::ostringstream json;
  write_table_json(json, t);
  JLTable back = table_from_json(json.str());
  CHECK(back == t);
  CHECK(back.engine() == t.engine());
  CHECK_THROWS_AS(table_from_json("{\"schema_version\": \"9.9\"}"), DomainError);
  CHECK_THROWS_AS(table_from_json("not json"), DomainError);
}

TEST_CASE("report documents") {
  ReportDocument doc;
  doc.command = "verify mode";
  doc.parameters = {{"n_max", 10}};
  CheckResult ok;
  ok.id = "a";
  CheckResult und;
  und.id = "b";
  und.undecide("(1,1)");
  doc.report.add(ok);
  doc.report.add(und);
  nlohmann::json j = to_json(doc);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["status"] == "undecided");
  CHECK(j["checks"].size() == 2);
  for (const char* key : {"id", "region", "method", "status", "points_checked", "failures", "undecided", "notes",
                          "duration_ms"}) {
    CHECK(j["checks"][0].contains(key));
  }
  CHECK(exit_code(doc.report.status()) == 3);
  CheckResult bad;
  bad.fail("x");
  doc.report.add(bad);
  CHECK(exit_code(doc.report.status()) == 1);
  CHECK(exit_code(Status::Verified) == 0);
  std::ostringstream text;
  write_report_text(text, doc);
  CHECK(text.str().find("verify mode: violation") == 0);
}
