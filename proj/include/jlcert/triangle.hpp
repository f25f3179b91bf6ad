#pragma once

// The Jaco-Lucas triangle JL(n,k), built by independent engines, plus the
// forward differences and row scans used by the certifier.

#include <cstdint>
#include <string>
#include <vector>

#include "jlcert/exactnum.hpp"
#include "jlcert/report.hpp"

namespace jlcert {

enum class Engine {
  ClosedForm,      // binomial sum
  RecColumns,      // second-order recurrence in n, seeded at n = 2k, 2k+1
  RecRows,         // first-order step in k, seeded by the Lucas column
};

const char* to_string(Engine e);
Engine engine_from_string(const std::string& name);

/// Rows n = 1..n_max; row n holds k = 0..floor(n/2). Immutable once built.
class JLTable {
 public:
  JLTable(int n_max, Engine engine, std::vector<std::vector<BigInt>> rows);

  int n_max() const { return n_max_; }
  Engine engine() const { return engine_; }
  const std::vector<BigInt>& row(int n) const;

  /// Zero-extended lookup: 0 for k < 0 or k > floor(n/2). Throws DomainError
  /// for rows that are not stored (n > n_max, or n <= 0 with k in range).
  const BigInt& operator()(int n, int k) const;

  /// Copy with one entry replaced (fault injection).
  JLTable with_entry(int n, int k, const BigInt& value) const;

  std::size_t entry_count() const;

  friend bool operator==(const JLTable& a, const JLTable& b) { return a.rows_ == b.rows_; }

 private:
  int n_max_;
  Engine engine_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[n-1]
};

/// Binomial sum for JL(n,k); 0 outside 0 <= k <= floor(n/2).
BigInt jl_closed_form(int n, int k);

JLTable build_table(int n_max, Engine engine);

/// Builds the table with every engine and compares entrywise.
CheckResult cross_check_engines(int n_max);

/// Compares a table against the closed form entrywise.
CheckResult check_against_closed_form(const JLTable& table, int n_max);

/// Delta(n,k) = JL(n,k+1) - JL(n,k) under zero-extension.
BigInt delta(const JLTable& table, int n, int k);
/// Delta(n,k) computed directly from its own binomial sum.
BigInt delta_direct(int n, int k);
/// Phi(n,k) = Delta(n+1,k) - Delta(n,k).
BigInt phi(const JLTable& table, int n, int k);
/// A(k) = Delta(6k+4, k).
BigInt diag_a(const JLTable& table, int k);
/// B(k) = Delta(6k+3, k).
BigInt diag_b(const JLTable& table, int k);

/// floor((n-4)/6) + 1, floor toward -infinity.
int mode_formula(int n);

struct ModeReport {
  int n = 0;
  int argmax = 0;
  bool unique = false;
  bool strictly_increasing_left = false;
  int formula_k_star = 0;
  bool formula_agrees = false;
  /// Rows below n = 4 are outside the theorem; agreement is informational.
  bool informational = false;
};

ModeReport row_argmax(const JLTable& table, int n);

struct SignViolation {
  int n;
  int k;
  BigInt value;
};

struct SignScanReport {
  std::vector<std::string> regions;
  std::vector<SignViolation> violations;
  std::uint64_t points_checked = 0;
  /// Log-concavity: every inequality strict. Delta scan: no zero inside a region.
  bool all_strict = true;
  std::vector<std::pair<int, int>> equality_points;

  Status status() const { return violations.empty() ? Status::Verified : Status::Violation; }
  CheckResult to_check(const std::string& id) const;
};

/// JL(n,k)^2 >= JL(n,k-1) JL(n,k+1) for 1 <= k < floor(n/2), n <= n_max.
SignScanReport scan_log_concavity(const JLTable& table, int n_max);

/// Delta <= 0 on 2k <= n <= 6k+3 and Delta >= 0 on n >= 6k+4.
SignScanReport scan_delta_signs(const JLTable& table, int n_max);

/// row_argmax for every row; violations for n >= 4 only.
CheckResult scan_mode(const JLTable& table, int n_max);

}  // namespace jlcert
