// Command-line frontend. Exit codes: 0 verified, 1 violation, 2 usage or
// domain error, 3 undecided at the precision cap.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "jlcert/bfile.hpp"
#include "jlcert/certifier.hpp"
#include "jlcert/combinatorics.hpp"
#include "jlcert/io.hpp"
#include "jlcert/recurrences.hpp"

using namespace jlcert;

namespace {

constexpr int kUsageError = 2;

struct Options {
  int n_max = 0;
  int k_max = 60;
  int scan_n_max = 500;
  int recurrence_n_max = 200;
  int oracle_n_max = 14;
  int cap = kDefaultEnumerationCap;
  bool no_oracle = false;
  std::string format = "text";
  std::string table_format = "csv";
  std::string engine = "rec_2_3_columns";
  std::string output;
  std::string suite;
  std::string bfile;
  std::string id;
  std::string row_pattern;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opt.output);
  out << text;
}

int finish(const Options& opt, ReportDocument doc) {
  std::ostringstream os;
  if (opt.format == "json") {
    os << to_json(doc).dump(2) << '\n';
  } else {
    write_report_text(os, doc);
  }
  emit(opt, os.str());
  if (!opt.output.empty()) std::cout << doc.command << ": " << to_string(doc.report.status()) << '\n';
  return exit_code(doc.report.status());
}

int run_table(const Options& opt) {
  if (opt.n_max < 1) throw DomainError("--n-max", "--n-max must be at least 1");
  JLTable t = build_table(opt.n_max, engine_from_string(opt.engine));
  std::ostringstream os;
  if (opt.table_format == "json") write_table_json(os, t);
  else write_table_csv(os, t);
  emit(opt, os.str());
  return 0;
}

Report suite_log_concavity(const Options& opt) {
  JLTable t = build_table(opt.n_max + 1, Engine::RecColumns);
  Report rep;
  rep.add(scan_log_concavity(t, opt.n_max).to_check("triangle.log_concavity"));
  rep.append(verify_log_concavity_argument(t, opt.n_max));
  return rep;
}

Report suite_mode(const Options& opt) {
  JLTable t = build_table(std::max(opt.n_max + 1, 6 * opt.k_max + 5), Engine::RecColumns);
  Report rep;
  rep.add(scan_mode(t, opt.n_max));
  rep.add(scan_delta_signs(t, opt.n_max).to_check("triangle.delta_signs"));
  rep.append(verify_diagonals(t, opt.k_max));
  for (ConeSystem s : {ConeSystem::DSystem, ConeSystem::BSystem, ConeSystem::CSystem}) {
    rep.add(cone_certificate(s, std::max(opt.n_max, 4)));
  }
  rep.append(audit_phi(t, opt.n_max));
  return rep;
}

Report suite_recurrences(const Options& opt) {
  int rows = 1;
  for (IdentityId id : all_identities()) {
    const bool diagonal = id == IdentityId::DiagonalA || id == IdentityId::DiagonalB;
    rows = std::max(rows, rows_needed(id, diagonal ? opt.k_max : opt.n_max));
  }
  JLTable t = build_table(rows, Engine::RecColumns);
  Report rep;
  for (IdentityId id : all_identities()) {
    const bool diagonal = id == IdentityId::DiagonalA || id == IdentityId::DiagonalB;
    rep.add(scan_identity(t, id, diagonal ? opt.k_max : opt.n_max).to_check());
  }
  rep.append(verify_chaining());
  return rep;
}

Report suite_bounds(const Options& opt) {
  JLTable t = build_table(opt.n_max + 2, Engine::RecColumns);
  Report rep;
  rep.append(verify_ratio_lower_bound(t, opt.n_max));
  rep.append(verify_ratio_window(t, opt.n_max));
  rep.append(verify_discriminant_factorization());
  rep.add(verify_discriminant_threshold(opt.n_max));
  return rep;
}

Report suite_all(const Options& opt) {
  PipelineConfig c;
  c.n_max = opt.n_max;
  c.scan_n_max = opt.scan_n_max;
  c.recurrence_n_max = opt.recurrence_n_max;
  c.k_max = opt.k_max;
  c.oracle_n_max = opt.oracle_n_max;
  c.run_oracle = !opt.no_oracle;
  return certify_all(c);
}

int run_verify(const Options& opt) {
  if (opt.n_max < 1) throw DomainError("--n-max", "--n-max must be at least 1");
  if (opt.k_max < 0) throw DomainError("--k-max", "--k-max must be nonnegative");
  ReportDocument doc;
  doc.command = "verify " + opt.suite;
  doc.parameters = {{"n_max", opt.n_max}, {"k_max", opt.k_max}};
  if (opt.suite == "log-concavity") {
    doc.report = suite_log_concavity(opt);
  } else if (opt.suite == "mode") {
    doc.report = suite_mode(opt);
    if (opt.n_max < 4) {
      doc.report.checks.front().notes.push_back("the mode theorem is stated for n >= 4; rows below are informational");
    }
  } else if (opt.suite == "recurrences") {
    doc.report = suite_recurrences(opt);
  } else if (opt.suite == "bounds") {
    doc.report = suite_bounds(opt);
  } else {
    doc.parameters["scan_n_max"] = opt.scan_n_max;
    doc.parameters["recurrence_n_max"] = opt.recurrence_n_max;
    doc.parameters["oracle_n_max"] = opt.no_oracle ? 0 : opt.oracle_n_max;
    doc.report = suite_all(opt);
  }
  return finish(opt, std::move(doc));
}

int run_oracle(const Options& opt) {
  ReportDocument doc;
  doc.command = "oracle";
  doc.parameters = {{"n_max", opt.n_max}, {"cap", opt.cap}};
  doc.report.add(cross_check_oracle(opt.n_max, opt.cap));
  return finish(opt, std::move(doc));
}

int run_oeis_compare(const Options& opt) {
  BFile b = ingest_bfile(opt.bfile, opt.id);
  std::optional<RowPattern> pattern;
  if (!opt.row_pattern.empty()) pattern = row_pattern_from_string(opt.row_pattern);
  ReportDocument doc;
  doc.command = "oeis compare";
  doc.parameters = {{"bfile", opt.bfile}, {"id", opt.id}, {"entries", b.entries.size()}};
  doc.report = compare_oeis(b, opt.id, pattern);
  return finish(opt, std::move(doc));
}

void add_report_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", opt.output, "Write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of log-concavity and unimodality for the Jaco-Lucas triangle"};
  app.require_subcommand(1);
  Options opt;

  auto* table = app.add_subcommand("table", "Compute and export JL(n,k)");
  table->add_option("--n-max", opt.n_max, "Last row")->required();
  table->add_option("--format", opt.table_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--engine", opt.engine, "Construction engine")
      ->check(CLI::IsMember({"closed_form", "rec_2_3_columns", "rec_2_2_rows"}));
  table->add_option("--output", opt.output, "Write to a file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", opt.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"log-concavity", "mode", "recurrences", "bounds", "all"}));
  verify->add_option("--n-max", opt.n_max, "Row bound")->required();
  verify->add_option("--k-max", opt.k_max, "Diagonal bound");
  verify->add_option("--scan-n-max", opt.scan_n_max, "Row bound for table-level scans (all)");
  verify->add_option("--recurrence-n-max", opt.recurrence_n_max, "Row bound for recurrence residuals (all)");
  verify->add_option("--oracle-n-max", opt.oracle_n_max, "Enumeration bound (all)");
  verify->add_flag("--no-oracle", opt.no_oracle, "Skip the enumeration oracle (all)");
  add_report_options(verify, opt);

  auto* oracle = app.add_subcommand("oracle", "Compare brute-force string counts with the closed form");
  oracle->add_option("--n-max", opt.n_max, "Longest string")->required();
  oracle->add_option("--cap", opt.cap, "Largest length the enumerator accepts");
  add_report_options(oracle, opt);

  auto* oeis = app.add_subcommand("oeis", "OEIS b-file tools");
  oeis->require_subcommand(1);
  auto* compare = oeis->add_subcommand("compare", "Compare a local b-file");
  compare->add_option("--bfile", opt.bfile, "Path to the b-file")->required();
  compare->add_option("--id", opt.id, "Sequence id")
      ->required()
      ->check(CLI::IsMember({"A245962", "A037027", "A073370"}));
  compare->add_option("--row-pattern", opt.row_pattern, "Row layout override")
      ->check(CLI::IsMember({"full", "half", "half-from-1"}));
  add_report_options(compare, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << app.help();
    return kUsageError;
  }

  try {
    if (*table) return run_table(opt);
    if (*verify) return run_verify(opt);
    if (*oracle) return run_oracle(opt);
    if (*compare) return run_oeis_compare(opt);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
  } catch (const BFileParseError& e) {
    std::cerr << "b-file parse error: " << e.what() << '\n';
  } catch (const BFileFormatError& e) {
    std::cerr << "b-file format error: " << e.what() << '\n';
  } catch (const AlignmentError& e) {
    std::cerr << "alignment error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsageError;
}
