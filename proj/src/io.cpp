#include "jlcert/io.hpp"

#include <iomanip>
#include <ostream>

namespace jlcert {

using nlohmann::json;

void write_table_csv(std::ostream& out, const JLTable& table) {
  out << "n,k,value\n";
  for (int n = 1; n <= table.n_max(); ++n) {
    const auto& row = table.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) out << n << ',' << k << ',' << row[k].get_str() << '\n';
  }
}

void write_table_json(std::ostream& out, const JLTable& table) {
  json rows = json::array();
  for (int n = 1; n <= table.n_max(); ++n) {
    json row = json::array();
    for (const BigInt& v : table.row(n)) row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }
  json doc = {{"schema_version", kTableSchemaVersion},
              {"n_max", table.n_max()},
              {"engine", to_string(table.engine())},
              {"first_row", 1},
              {"rows", std::move(rows)}};
  out << doc.dump(1) << '\n';
}

JLTable table_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("table json", std::string("malformed table JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<std::string>() != kTableSchemaVersion) {
      throw DomainError("schema_version", "unsupported table schema " + doc.at("schema_version").dump());
    }
    const int n_max = doc.at("n_max").get<int>();
    const auto& rows_json = doc.at("rows");
    if (doc.at("first_row").get<int>() != 1 || static_cast<int>(rows_json.size()) != n_max) {
      throw DomainError("rows", "row count does not match n_max");
    }
    std::vector<std::vector<BigInt>> rows;
    for (const auto& r : rows_json) {
      std::vector<BigInt> row;
      for (const auto& v : r) row.emplace_back(v.get<std::string>());
      rows.push_back(std::move(row));
    }
    return JLTable(n_max, engine_from_string(doc.at("engine").get<std::string>()), std::move(rows));
  } catch (const json::exception& e) {
    throw DomainError("table json", std::string("table JSON does not match the schema: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError("table json", std::string("non-integer table value: ") + e.what());
  }
}

json to_json(const CheckResult& c) {
  return {{"id", c.id},
          {"region", c.region},
          {"method", to_string(c.method)},
          {"status", to_string(c.status)},
          {"points_checked", c.points_checked},
          {"failure_count", c.failure_count},
          {"undecided_count", c.undecided_count},
          {"failures", c.failures},
          {"undecided", c.undecided},
          {"notes", c.notes},
          {"duration_ms", c.duration_ms}};
}

json to_json(const ReportDocument& doc) {
  json checks = json::array();
  for (const auto& c : doc.report.checks) checks.push_back(to_json(c));
  return {{"schema_version", kReportSchemaVersion},
          {"command", doc.command},
          {"parameters", doc.parameters},
          {"status", to_string(doc.report.status())},
          {"checks", std::move(checks)}};
}

void write_report_text(std::ostream& out, const ReportDocument& doc) {
  out << doc.command << ": " << to_string(doc.report.status()) << '\n';
  for (const auto& c : doc.report.checks) {
    out << "  [" << std::setw(9) << std::left << to_string(c.status) << "] " << c.id << "  (" << c.region << "; "
        << to_string(c.method) << "; " << c.points_checked << " point(s); " << std::fixed << std::setprecision(1)
        << c.duration_ms << " ms)\n";
    for (const auto& f : c.failures) out << "      failure: " << f << '\n';
    if (c.failure_count > c.failures.size()) {
      out << "      ... " << (c.failure_count - c.failures.size()) << " more failure(s)\n";
    }
    for (const auto& u : c.undecided) out << "      undecided: " << u << '\n';
    for (const auto& n : c.notes) out << "      note: " << n << '\n';
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::Verified: return 0;
    case Status::Violation: return 1;
    case Status::Undecided: return 3;
  }
  return 1;
}

}  // namespace jlcert
