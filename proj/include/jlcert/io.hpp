#pragma once
// Serialization: triangle as CSV or JSON, and versioned report documents.
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "jlcert/report.hpp"
#include "jlcert/triangle.hpp"

namespace jlcert {

inline constexpr const char* kReportSchemaVersion = "1.0";
inline constexpr const char* kTableSchemaVersion = "1.0";

/// Header `n,k,value`, one line per stored entry, values in decimal.
void write_table_csv(std::ostream& out, const JLTable& table);
void write_table_json(std::ostream& out, const JLTable& table);
/// Inverse of write_table_json. Throws DomainError on schema mismatch.
JLTable table_from_json(const std::string& text);

struct ReportDocument {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  Report report;
};

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const ReportDocument& doc);
void write_report_text(std::ostream& out, const ReportDocument& doc);

/// 0 verified, 1 violation, 3 undecided.
int exit_code(Status s);

}  // namespace jlcert
