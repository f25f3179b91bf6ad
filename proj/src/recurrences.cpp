#include "jlcert/recurrences.hpp"

#include <algorithm>
#include <stdexcept>

namespace jlcert {

namespace {

const BiPoly N = BiPoly::var(0);
const BiPoly K = BiPoly::var(1);

RatFunc frac(const BiPoly& num, const BiPoly& den) { return {num, den}; }

BiPoly sextic() {
  return BiPoly(462369600L) + BiPoly(2067513120L) * K + BiPoly(3748025842L) * K.pow(2) +
         BiPoly(3537926637L) * K.pow(3) + BiPoly(1838345599L) * K.pow(4) + BiPoly(499358523L) * K.pow(5) +
         BiPoly(55457479L) * K.pow(6);
}

BiPoly b_poly(int j) {
  switch (j) {
    case 0:
      return 72 * (3 + 2 * K) * (4 + 3 * K) * (5 + 3 * K) * (7 + 3 * K) * (8 + 3 * K) * (5 + 6 * K) *
             (7 + 6 * K) * (2640 + 2681 * K + 671 * K.pow(2));
    case 1:
      return -(2 + K) * (7 + 3 * K) * (8 + 3 * K) * sextic();
    case 2:
      return 40 * (2 + K) * (3 + K) * (5 + 2 * K) * (4 + 3 * K) * (5 + 3 * K) * (9 + 4 * K) * (11 + 4 * K) *
             (630 + 1339 * K + 671 * K.pow(2));
    default:
      throw DomainError("j", "diagonal coefficient index must be 0, 1 or 2");
  }
}

BiPoly c_poly(int j) {
  switch (j) {
    case 0:
      return 72 * (3 + 2 * K).pow(2) * (2 + 3 * K) * (4 + 3 * K) * (7 + 3 * K) * (5 + 6 * K) * (7 + 6 * K) *
             (2640 + 2681 * K + 671 * K.pow(2));
    case 1:
      return -(2 + K) * (1 + 2 * K) * (7 + 3 * K) * sextic();
    case 2:
      return 40 * (2 + K) * (3 + K) * (1 + 2 * K) * (3 + 2 * K) * (4 + 3 * K) * (9 + 4 * K) * (11 + 4 * K) *
             (630 + 1339 * K + 671 * K.pow(2));
    default:
      throw DomainError("j", "diagonal coefficient index must be 0, 1 or 2");
  }
}

BiPoly d_poly(int j) {
  switch (j) {
    case 0:
      return (1 + N) * (2 + N) * (-2 - 6 * K + N) * (-3 * K + N);
    case 1:
      return (2 + N) * (3 + 12 * K + 3 * K.pow(2) - 18 * K.pow(3) + 8 * K * N + 27 * K.pow(2) * N -
                        2 * N.pow(2) - 10 * K * N.pow(2) + N.pow(3));
    case 2:
      return -(1 + N) * (-3 - 6 * K + N) * (-1 - 3 * K + N) * (2 - 2 * K + N);
    default:
      throw DomainError("j", "difference coefficient index must be 0, 1 or 2");
  }
}

DomainGuard guard_k_ge_1() {
  return {"n >= 2k, k >= 1", [](int n, int k) { return k >= 1 && n >= 2 * k; }};
}

DomainGuard guard_k_ge_0() {
  return {"n >= 2k, n >= 1, k >= 0", [](int n, int k) { return k >= 0 && n >= 1 && n >= 2 * k; }};
}

DomainGuard guard_diagonal() {
  return {"k >= 0", [](int, int k) { return k >= 0; }};
}

std::vector<RecurrenceSpec> make_specs() {
  std::vector<RecurrenceSpec> specs;
  auto row_plus = [](int extra) { return [extra](int n, int) { return n + extra; }; };

  specs.push_back({IdentityId::ColumnLowerStep, "column-lower-step", SequenceKind::JL,
                   {{0, -1, RatFunc(1)},
                    {1, 0, -frac(K * N, (N + 1) * (N - 2 * K + 2))},
                    {0, 0, -frac(2 * K, N - 2 * K + 2)}},
                   guard_k_ge_1(), row_plus(1)});

  specs.push_back({IdentityId::RowStep, "row-step", SequenceKind::JL,
                   {{0, 1, RatFunc(1)},
                    {1, 0, frac(N * (N - 2 * K + 1), 5 * (N + 1) * (K + 1))},
                    {0, 0, -frac(3 * N - 5 * K, 5 * (K + 1))}},
                   guard_k_ge_0(), row_plus(1)});

  specs.push_back({IdentityId::ColumnRecurrence, "column", SequenceKind::JL,
                   {{2, 0, RatFunc(1)},
                    {1, 0, -frac((N - K + 1) * (N + 2), (N + 1) * (N - 2 * K + 2))},
                    {0, 0, -frac(N + 2, N - 2 * K + 2)}},
                   guard_k_ge_0(), row_plus(2)});

  specs.push_back({IdentityId::ColumnRecurrencePoly, "column-poly", SequenceKind::JL,
                   {{0, 0, RatFunc(-(1 + N) * (2 + N))},
                    {1, 0, RatFunc((-1 + K - N) * (2 + N))},
                    {2, 0, RatFunc((1 + N) * (2 - 2 * K + N))}},
                   guard_k_ge_0(), row_plus(2)});

  specs.push_back({IdentityId::DiagonalRelation, "diagonal-relation", SequenceKind::JL,
                   {{-1, -1, RatFunc(-N * (1 + N))}, {0, 0, RatFunc(-K * (1 + N))}, {1, 0, RatFunc(2 * K * N)}},
                   guard_k_ge_1(), row_plus(1)});

  specs.push_back({IdentityId::DiagonalSolved, "diagonal-solved", SequenceKind::JL,
                   {{0, -1, RatFunc(1)}, {1, 0, frac(K, N + 1)}, {2, 0, -frac(2 * K, N + 2)}},
                   guard_k_ge_1(), row_plus(2)});

  const BiPoly den26 = (N - 2 * K + 2) * (N - 2 * K + 1);
  specs.push_back({IdentityId::RowThreeTerm, "row-three-term", SequenceKind::JL,
                   {{0, -1, RatFunc(1)},
                    {0, 0, -frac(K * (5 * N - 9 * K + 2), den26)},
                    {0, 1, frac(5 * K * (K + 1), den26)}},
                   guard_k_ge_1(), row_plus(0)});

  specs.push_back({IdentityId::DeltaRecurrence, "delta", SequenceKind::Delta,
                   {{0, 0, RatFunc(d_poly(0))}, {1, 0, RatFunc(d_poly(1))}, {2, 0, RatFunc(d_poly(2))}},
                   guard_k_ge_0(), row_plus(2)});

  auto diag_rows = [](int base) { return [base](int, int k) { return 6 * (k + 2) + base; }; };
  specs.push_back({IdentityId::DiagonalA, "b-system", SequenceKind::DiagA,
                   {{0, 0, RatFunc(b_poly(0))}, {0, 1, RatFunc(b_poly(1))}, {0, 2, RatFunc(b_poly(2))}},
                   guard_diagonal(), diag_rows(4)});

  specs.push_back({IdentityId::DiagonalB, "c-system", SequenceKind::DiagB,
                   {{0, 0, RatFunc(c_poly(0))}, {0, 1, RatFunc(c_poly(1))}, {0, 2, RatFunc(c_poly(2))}},
                   guard_diagonal(), diag_rows(3)});
  return specs;
}

const std::vector<RecurrenceSpec>& specs() {
  static const std::vector<RecurrenceSpec> s = make_specs();
  return s;
}

bool is_diagonal(const RecurrenceSpec& s) {
  return s.sequence == SequenceKind::DiagA || s.sequence == SequenceKind::DiagB;
}

BigInt sequence_value(const JLTable& table, SequenceKind kind, int n, int k) {
  switch (kind) {
    case SequenceKind::JL: return table(n, k);
    case SequenceKind::Delta: return delta(table, n, k);
    case SequenceKind::DiagA: return diag_a(table, k);
    case SequenceKind::DiagB: return diag_b(table, k);
  }
  throw DomainError("sequence", "unknown sequence kind");
}

std::string point(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& s : specs()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

const RecurrenceSpec& recurrence_spec(IdentityId id) {
  for (const auto& s : specs())
    if (s.id == id) return s;
  throw DomainError("identity", "unknown identity");
}

IdentityId identity_from_name(const std::string& name) {
  for (const auto& s : specs())
    if (s.name == name) return s.id;
  throw DomainError("identity", "unknown identity '" + name + "'");
}

BiPoly d_coeff(int j) { return d_poly(j); }
UniPoly b_coeff(int j) { return b_poly(j).restrict_first(0); }
UniPoly c_coeff(int j) { return c_poly(j).restrict_first(0); }

Rational eval_residual(const JLTable& table, IdentityId id, int n, int k) {
  const RecurrenceSpec& spec = recurrence_spec(id);
  if (!spec.guard.holds(n, k)) {
    throw DomainError(spec.guard.description,
                      spec.name + " evaluated at " + point(n, k) + " outside its guard " + spec.guard.description);
  }
  Rational residual = 0;
  for (const auto& t : spec.terms) {
    Rational c = t.coeff(Rational(n), Rational(k));
    if (sign(c) == 0) continue;
    residual += c * Rational(sequence_value(table, spec.sequence, n + t.dn, k + t.dk));
  }
  return residual;
}

int rows_needed(IdentityId id, int bound) {
  const RecurrenceSpec& spec = recurrence_spec(id);
  return is_diagonal(spec) ? spec.max_row(0, bound) : spec.max_row(bound, bound / 2);
}

CheckResult ResidualReport::to_check() const {
  CheckResult r;
  r.id = "recurrence." + identity;
  r.region = range;
  r.points_checked = points_checked;
  for (const auto& [p, v] : nonzero) r.fail(point(p.first, p.second) + ": residual " + v.get_str());
  return r;
}

ResidualReport scan_identity(const JLTable& table, IdentityId id, int bound) {
  const RecurrenceSpec& spec = recurrence_spec(id);
  if (rows_needed(id, bound) > table.n_max()) {
    throw DomainError("n_max", spec.name + " up to " + std::to_string(bound) + " needs table rows up to " +
                                   std::to_string(rows_needed(id, bound)));
  }
  ResidualReport rep;
  rep.identity = spec.name;
  auto visit = [&](int n, int k) {
    if (!spec.guard.holds(n, k)) return;
    ++rep.points_checked;
    Rational r = eval_residual(table, id, n, k);
    if (sign(r) != 0) rep.nonzero.push_back({{n, k}, r});
  };
  if (is_diagonal(spec)) {
    rep.range = spec.guard.description + ", k <= " + std::to_string(bound);
    for (int k = 0; k <= bound; ++k) visit(0, k);
  } else {
    rep.range = spec.guard.description + ", n <= " + std::to_string(bound);
    for (int n = 1; n <= bound; ++n)
      for (int k = 0; k <= n / 2; ++k) visit(n, k);
  }
  return rep;
}

// ---------------------------------------------------------------------------

LinearForm linear_form(IdentityId id) {
  const RecurrenceSpec& spec = recurrence_spec(id);
  if (spec.sequence != SequenceKind::JL) throw DomainError("identity", spec.name + " is not a triangle identity");
  LinearForm f;
  for (const auto& t : spec.terms) {
    auto [it, inserted] = f.try_emplace({t.dn, t.dk}, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  return f;
}

LinearForm shift_rows(const LinearForm& f, int a) {
  LinearForm out;
  for (const auto& [key, c] : f) out.emplace(std::make_pair(key.first + a, key.second), c.shift(a, 0));
  return out;
}

LinearForm normalize(const LinearForm& f, std::pair<int, int> key) {
  auto it = f.find(key);
  if (it == f.end() || it->second.is_zero()) throw DomainError("key", "normalizing on an absent term");
  LinearForm out;
  for (const auto& [k, c] : f) out.emplace(k, c / it->second);
  return out;
}

LinearForm eliminate(const LinearForm& f, const LinearForm& g, std::pair<int, int> key) {
  auto fi = f.find(key);
  auto gi = g.find(key);
  if (fi == f.end() || gi == g.end()) throw DomainError("key", "eliminating a term absent from a form");
  LinearForm out;
  for (const auto& [k, c] : f) out.emplace(k, c * gi->second);
  for (const auto& [k, c] : g) {
    RatFunc scaled = c * fi->second;
    auto [it, inserted] = out.try_emplace(k, -scaled);
    if (!inserted) it->second = it->second - scaled;
  }
  out.erase(key);
  return out;
}

bool forms_equal(const LinearForm& f, const LinearForm& g) {
  auto nonzero_keys = [](const LinearForm& x) {
    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, c] : x)
      if (!c.is_zero() && !c.equals(RatFunc(0))) keys.push_back(k);
    return keys;
  };
  auto kf = nonzero_keys(f);
  if (kf != nonzero_keys(g)) return false;
  return std::all_of(kf.begin(), kf.end(), [&](const auto& k) { return f.at(k).equals(g.at(k)); });
}

Report verify_chaining() {
  Report rep;
  auto record = [&](const std::string& id, const std::string& what, bool ok) {
    CheckResult c;
    c.id = id;
    c.region = "identity of rational functions in (n,k)";
    c.method = Method::SymbolicCertificate;
    c.points_checked = 1;
    c.notes.push_back(what);
    if (!ok) c.fail(what + ": coefficients differ");
    rep.add(std::move(c));
  };
  const std::pair<int, int> lower{0, -1};

  LinearForm diag_shifted = normalize(shift_rows(linear_form(IdentityId::DiagonalRelation), 1), lower);
  record("chain.solved_from_relation",
         "the diagonal relation at n+1, solved for JL(n,k-1), equals the solved diagonal form",
         forms_equal(diag_shifted, normalize(linear_form(IdentityId::DiagonalSolved), lower)));

  LinearForm col_poly = normalize(linear_form(IdentityId::ColumnRecurrencePoly), {2, 0});
  record("chain.column_from_poly",
         "the polynomial column recurrence normalized at JL(n+2,k) equals the column recurrence",
         forms_equal(col_poly, normalize(linear_form(IdentityId::ColumnRecurrence), {2, 0})));

  LinearForm lower_step = normalize(
      eliminate(linear_form(IdentityId::DiagonalSolved), linear_form(IdentityId::ColumnRecurrence), {2, 0}), lower);
  record("chain.lower_step_from_solved_and_column",
         "eliminating JL(n+2,k) between the solved diagonal form and the column recurrence gives the lower step",
         forms_equal(lower_step, normalize(linear_form(IdentityId::ColumnLowerStep), lower)));

  LinearForm row_step = normalize(
      eliminate(linear_form(IdentityId::ColumnLowerStep), linear_form(IdentityId::RowThreeTerm), lower), {0, 1});
  record("chain.row_step_from_lower_step_and_three_term",
         "eliminating JL(n,k-1) between the lower step and the three-term row relation gives the row step",
         forms_equal(row_step, normalize(linear_form(IdentityId::RowStep), {0, 1})));
  return rep;
}

}  // namespace jlcert
