#pragma once

// Recurrence identities for the triangle, stored as data: each is a list of
// (row offset, column offset, rational-function coefficient) terms over a
// named sequence, plus an explicit validity guard. One generic evaluator
// computes every residual, so a mistyped coefficient shows up in a scan.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jlcert/exactnum.hpp"
#include "jlcert/polynomials.hpp"
#include "jlcert/report.hpp"
#include "jlcert/triangle.hpp"

namespace jlcert {

enum class IdentityId {
  ColumnLowerStep,    // JL(n,k-1) from JL(n+1,k), JL(n,k)
  RowStep,            // JL(n,k+1) from JL(n+1,k), JL(n,k)
  ColumnRecurrence,   // JL(n+2,k) from JL(n+1,k), JL(n,k)
  ColumnRecurrencePoly,  // the same, with polynomial coefficients
  DiagonalRelation,   // -n(1+n)JL(n-1,k-1) - k(1+n)JL(n,k) + 2kn JL(n+1,k) = 0
  DiagonalSolved,     // the previous one shifted and solved for JL(n,k-1)
  RowThreeTerm,       // JL(n,k-1) from JL(n,k), JL(n,k+1)
  DeltaRecurrence,    // sum_j d_j(n,k) Delta(n+j,k) = 0
  DiagonalA,          // sum_j b_j(k) A(k+j) = 0, A(k) = Delta(6k+4,k)
  DiagonalB,          // sum_j c_j(k) B(k+j) = 0, B(k) = Delta(6k+3,k)
};

enum class SequenceKind { JL, Delta, DiagA, DiagB };

struct RecurrenceTerm {
  int dn;
  int dk;
  RatFunc coeff;  // in (n, k)
};

struct DomainGuard {
  std::string description;
  std::function<bool(int n, int k)> holds;
};

struct RecurrenceSpec {
  IdentityId id;
  std::string name;  // stable identifier used in reports
  SequenceKind sequence;
  std::vector<RecurrenceTerm> terms;
  DomainGuard guard;
  /// Largest row index touched at point (n, k).
  std::function<int(int n, int k)> max_row;
};

const std::vector<IdentityId>& all_identities();
const RecurrenceSpec& recurrence_spec(IdentityId id);
IdentityId identity_from_name(const std::string& name);

/// Coefficient polynomials of the difference recurrence and the diagonal
/// systems, exposed for the cone certificates.
BiPoly d_coeff(int j);   // in (n, k)
UniPoly b_coeff(int j);  // in k
UniPoly c_coeff(int j);  // in k

/// Exact LHS - RHS at (n, k). For the diagonal systems n is ignored and k is
/// the diagonal index. Throws DomainError outside the identity's guard.
Rational eval_residual(const JLTable& table, IdentityId id, int n, int k);

struct ResidualReport {
  std::string identity;
  std::string range;
  std::uint64_t points_checked = 0;
  std::vector<std::pair<std::pair<int, int>, Rational>> nonzero;

  bool verified() const { return nonzero.empty(); }
  CheckResult to_check() const;
};

/// Every lattice point of the guard with n <= n_max (diagonal systems: every
/// k <= bound). The table must hold the rows the points touch.
ResidualReport scan_identity(const JLTable& table, IdentityId id, int bound);

/// Table rows needed to scan id up to bound.
int rows_needed(IdentityId id, int bound);

// ---------------------------------------------------------------------------
// Symbolic consistency between identities.

/// sum over (dn, dk) of coeff * JL(n+dn, k+dk) = 0.
using LinearForm = std::map<std::pair<int, int>, RatFunc>;

LinearForm linear_form(IdentityId id);
/// The identity with n replaced by n + a.
LinearForm shift_rows(const LinearForm& f, int a);
LinearForm normalize(const LinearForm& f, std::pair<int, int> key);
/// Cancels `key` between f and g.
LinearForm eliminate(const LinearForm& f, const LinearForm& g, std::pair<int, int> key);
bool forms_equal(const LinearForm& f, const LinearForm& g);

/// The derivations linking the identities, each checked as an equality of
/// rational functions.
Report verify_chaining();

}  // namespace jlcert
