#include "jlcert/triangle.hpp"

#include <functional>
#include <sstream>

#include "jlcert/parallel.hpp"

namespace jlcert {

namespace {

using BinomialFn = std::function<BigInt(long, long)>;

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Pascal triangle rows 0..n_max.
class BinomialTable {
 public:
  explicit BinomialTable(long n_max) : rows_(static_cast<size_t>(n_max) + 1) {
    for (long n = 0; n <= n_max; ++n) {
      auto& row = rows_[static_cast<size_t>(n)];
      row.resize(static_cast<size_t>(n) + 1);
      row[0] = 1;
      row[static_cast<size_t>(n)] = 1;
      for (long k = 1; k < n; ++k) {
        const auto& prev = rows_[static_cast<size_t>(n - 1)];
        row[static_cast<size_t>(k)] = prev[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(k)];
      }
    }
  }
  const BigInt& operator()(long n, long k) const { return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)]; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

template <typename Binom>
BigInt closed_form_sum(int n, int k, const Binom& binom) {
  if (n <= 0) throw DomainError("n", "JL(n,k) requires n >= 1, got n = " + std::to_string(n));
  if (k < 0 || k > n / 2) return 0;
  BigInt sum = 0;
  for (int i = k; i <= n / 2; ++i) {
    BigInt num = BigInt(n) * binom(n - i, i) * binom(i, k);
    sum += exact_div(num, BigInt(n - i), "closed-form term");
  }
  return sum;
}

JLTable build_closed_form(int n_max) {
  BinomialTable binom(n_max);
  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(n_max));
  parallel_for(1, n_max + 1, [&](long n) {
    auto& row = rows[static_cast<size_t>(n - 1)];
    row.resize(static_cast<size_t>(n / 2) + 1);
    for (int k = 0; k <= n / 2; ++k) row[static_cast<size_t>(k)] = closed_form_sum(static_cast<int>(n), k, binom);
  });
  return {n_max, Engine::ClosedForm, std::move(rows)};
}

std::vector<std::vector<BigInt>> empty_rows(int n_max) {
  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rows[static_cast<size_t>(n - 1)].resize(static_cast<size_t>(n / 2) + 1);
  return rows;
}

// Column k is filled upward in n from its two seeds at n = 2k, 2k+1 with
// (1+n)(2-2k+n) JL(n+2,k) = (n-k+1)(n+2) JL(n+1,k) + (1+n)(2+n) JL(n,k).
JLTable build_rec_columns(int n_max) {
  auto rows = empty_rows(n_max);
  auto set = [&](int n, int k, BigInt v) { rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] = std::move(v); };
  for (int k = 0; k <= n_max / 2; ++k) {
    int n0 = std::max(2 * k, 1);
    BigInt prev = jl_closed_form(n0, k);
    set(n0, k, prev);
    if (n0 + 1 > n_max) continue;
    BigInt cur = jl_closed_form(n0 + 1, k);
    set(n0 + 1, k, cur);
    for (int n = n0; n + 2 <= n_max; ++n) {
      BigInt num = BigInt(n - k + 1) * (n + 2) * cur + BigInt(n + 1) * (n + 2) * prev;
      BigInt next = exact_div(num, BigInt(n + 1) * (n - 2 * k + 2), "column recurrence");
      set(n + 2, k, next);
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return {n_max, Engine::RecColumns, std::move(rows)};
}

// Column 0 is the Lucas sequence; column k+1 comes from
// 5(n+1)(k+1) JL(n,k+1) = -n(n-2k+1) JL(n+1,k) + (3n-5k)(n+1) JL(n,k),
// which consumes one extra row of column k per step.
JLTable build_rec_rows(int n_max) {
  const int top = n_max + n_max / 2 + 1;
  std::vector<BigInt> column(static_cast<size_t>(top) + 1);  // indexed by n
  column[1] = 1;
  if (top >= 2) column[2] = 3;
  for (int n = 3; n <= top; ++n) column[static_cast<size_t>(n)] = column[static_cast<size_t>(n - 1)] + column[static_cast<size_t>(n - 2)];

  auto rows = empty_rows(n_max);
  int col_top = top;  // column k is valid for n <= col_top
  for (int k = 0;; ++k) {
    for (int n = std::max(2 * k, 1); n <= n_max; ++n) rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] = column[static_cast<size_t>(n)];
    if (k + 1 > n_max / 2) break;
    std::vector<BigInt> next(static_cast<size_t>(top) + 1);
    for (int n = 2 * (k + 1); n + 1 <= col_top; ++n) {
      BigInt num = BigInt(-n) * (n - 2 * k + 1) * column[static_cast<size_t>(n + 1)] +
                   BigInt(3 * n - 5 * k) * (n + 1) * column[static_cast<size_t>(n)];
      next[static_cast<size_t>(n)] = exact_div(num, BigInt(5) * (n + 1) * (k + 1), "row recurrence");
    }
    column = std::move(next);
    --col_top;
  }
  return {n_max, Engine::RecRows, std::move(rows)};
}

}  // namespace

const char* to_string(Engine e) {
  switch (e) {
    case Engine::ClosedForm: return "closed_form";
    case Engine::RecColumns: return "rec_2_3_columns";
    case Engine::RecRows: return "rec_2_2_rows";
  }
  return "?";
}

Engine engine_from_string(const std::string& name) {
  if (name == "closed_form") return Engine::ClosedForm;
  if (name == "rec_2_3_columns") return Engine::RecColumns;
  if (name == "rec_2_2_rows") return Engine::RecRows;
  throw DomainError("engine", "unknown engine '" + name + "'");
}

JLTable::JLTable(int n_max, Engine engine, std::vector<std::vector<BigInt>> rows)
    : n_max_(n_max), engine_(engine), rows_(std::move(rows)) {
  if (n_max_ < 1 || static_cast<int>(rows_.size()) != n_max_) {
    throw DomainError("n_max", "table needs exactly n_max >= 1 rows");
  }
  for (int n = 1; n <= n_max_; ++n) {
    if (rows_[static_cast<size_t>(n - 1)].size() != static_cast<size_t>(n / 2 + 1)) {
      throw DomainError("row", "row " + std::to_string(n) + " must hold floor(n/2)+1 entries");
    }
  }
}

const std::vector<BigInt>& JLTable::row(int n) const {
  if (n < 1 || n > n_max_) throw DomainError("n", "row " + std::to_string(n) + " not stored");
  return rows_[static_cast<size_t>(n - 1)];
}

const BigInt& JLTable::operator()(int n, int k) const {
  static const BigInt zero = 0;
  if (k < 0 || (n >= 0 && k > n / 2)) return zero;
  if (n < 1 || n > n_max_) {
    throw DomainError("n", "JL(" + std::to_string(n) + "," + std::to_string(k) + ") outside stored rows 1.." +
                               std::to_string(n_max_));
  }
  return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
}

JLTable JLTable::with_entry(int n, int k, const BigInt& value) const {
  if (n < 1 || n > n_max_ || k < 0 || k > n / 2) throw DomainError("entry", "no such table entry");
  JLTable copy = *this;
  copy.rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] = value;
  return copy;
}

std::size_t JLTable::entry_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.size();
  return c;
}

BigInt jl_closed_form(int n, int k) { return closed_form_sum(n, k, binomial); }

JLTable build_table(int n_max, Engine engine) {
  if (n_max < 1) throw DomainError("n_max", "n_max must be >= 1");
  switch (engine) {
    case Engine::ClosedForm: return build_closed_form(n_max);
    case Engine::RecColumns: return build_rec_columns(n_max);
    case Engine::RecRows: return build_rec_rows(n_max);
  }
  throw DomainError("engine", "unknown engine");
}

namespace {

void compare_tables(const JLTable& a, const JLTable& b, int n_max, CheckResult& out) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n / 2; ++k) {
      ++out.points_checked;
      if (a(n, k) != b(n, k)) {
        out.fail(std::string(to_string(a.engine())) + " vs " + to_string(b.engine()) + " at (" + std::to_string(n) +
                 "," + std::to_string(k) + "): " + a(n, k).get_str() + " != " + b(n, k).get_str());
      }
    }
  }
}

}  // namespace

CheckResult cross_check_engines(int n_max) {
  CheckResult r;
  r.id = "table.engine_equivalence";
  r.region = "1 <= n <= " + std::to_string(n_max);
  Stopwatch timer;
  JLTable closed = build_table(n_max, Engine::ClosedForm);
  JLTable cols = build_table(n_max, Engine::RecColumns);
  JLTable rows = build_table(n_max, Engine::RecRows);
  compare_tables(closed, cols, n_max, r);
  compare_tables(closed, rows, n_max, r);
  r.duration_ms = timer.ms();
  return r;
}

CheckResult check_against_closed_form(const JLTable& table, int n_max) {
  CheckResult r;
  r.id = "table.closed_form_agreement";
  r.region = "1 <= n <= " + std::to_string(n_max);
  Stopwatch timer;
  JLTable closed = build_table(n_max, Engine::ClosedForm);
  compare_tables(closed, table, n_max, r);
  r.duration_ms = timer.ms();
  return r;
}

BigInt delta(const JLTable& table, int n, int k) { return table(n, k + 1) - table(n, k); }

BigInt delta_direct(int n, int k) {
  if (n <= 0 || k < 0) throw DomainError("(n,k)", "Delta(n,k) requires n >= 1 and k >= 0");
  BigInt sum = 0;
  for (int i = k; i <= n / 2; ++i) {
    BigInt num = BigInt(n) * binomial(n - i, i) * binomial(i, k) * (i - 2 * k - 1);
    sum += exact_div(num, BigInt(n - i), "difference term");
  }
  return exact_div(sum, BigInt(k + 1), "difference sum");
}

BigInt phi(const JLTable& table, int n, int k) { return delta(table, n + 1, k) - delta(table, n, k); }

BigInt diag_a(const JLTable& table, int k) { return delta(table, 6 * k + 4, k); }

BigInt diag_b(const JLTable& table, int k) { return delta(table, 6 * k + 3, k); }

int mode_formula(int n) {
  int num = n - 4;
  int q = num / 6;
  if (num % 6 != 0 && num < 0) --q;
  return q + 1;
}

ModeReport row_argmax(const JLTable& table, int n) {
  const auto& row = table.row(n);
  ModeReport m;
  m.n = n;
  int best = 0;
  for (int k = 1; k < static_cast<int>(row.size()); ++k)
    if (row[static_cast<size_t>(k)] > row[static_cast<size_t>(best)]) best = k;
  m.argmax = best;
  m.unique = true;
  for (int k = 0; k < static_cast<int>(row.size()); ++k)
    if (k != best && row[static_cast<size_t>(k)] == row[static_cast<size_t>(best)]) m.unique = false;
  m.strictly_increasing_left = true;
  for (int k = 0; k < best; ++k)
    if (!(row[static_cast<size_t>(k)] < row[static_cast<size_t>(k + 1)])) m.strictly_increasing_left = false;
  m.formula_k_star = mode_formula(n);
  m.formula_agrees = m.formula_k_star == best;
  m.informational = n < 4;
  return m;
}

CheckResult SignScanReport::to_check(const std::string& id) const {
  CheckResult r;
  r.id = id;
  for (const auto& reg : regions) r.region += (r.region.empty() ? "" : "; ") + reg;
  r.points_checked = points_checked;
  for (const auto& v : violations) {
    r.fail("(" + std::to_string(v.n) + "," + std::to_string(v.k) + "): " + v.value.get_str());
  }
  std::ostringstream os;
  os << (all_strict ? "strict everywhere" : "equality at " + std::to_string(equality_points.size()) + " point(s)");
  for (std::size_t i = 0; i < equality_points.size() && i < 10; ++i) {
    os << (i == 0 ? ": " : ", ") << "(" << equality_points[i].first << "," << equality_points[i].second << ")";
  }
  r.notes.push_back(os.str());
  return r;
}

SignScanReport scan_log_concavity(const JLTable& table, int n_max) {
  SignScanReport rep;
  rep.regions.push_back("1 <= k < floor(n/2), n <= " + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k < n / 2; ++k) {
      ++rep.points_checked;
      BigInt gap = table(n, k) * table(n, k) - table(n, k - 1) * table(n, k + 1);
      if (sign(gap) < 0) rep.violations.push_back({n, k, gap});
      if (sign(gap) == 0) {
        rep.all_strict = false;
        rep.equality_points.emplace_back(n, k);
      }
    }
  }
  return rep;
}

SignScanReport scan_delta_signs(const JLTable& table, int n_max) {
  SignScanReport rep;
  rep.regions.push_back("Delta <= 0 on 2k <= n <= 6k+3");
  rep.regions.push_back("Delta >= 0 on n >= 6k+4, n <= " + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n / 2; ++k) {
      ++rep.points_checked;
      BigInt d = delta(table, n, k);
      bool left_region = n <= 6 * k + 3;
      if ((left_region && sign(d) > 0) || (!left_region && sign(d) < 0)) rep.violations.push_back({n, k, d});
      if (sign(d) == 0) {
        rep.all_strict = false;
        rep.equality_points.emplace_back(n, k);
      }
    }
  }
  return rep;
}

CheckResult scan_mode(const JLTable& table, int n_max) {
  CheckResult r;
  r.id = "triangle.mode";
  r.region = "4 <= n <= " + std::to_string(n_max) + " (rows 1..3 informational)";
  Stopwatch timer;
  for (int n = 1; n <= n_max; ++n) {
    ModeReport m = row_argmax(table, n);
    ++r.points_checked;
    std::string where = "n = " + std::to_string(n) + ": argmax " + std::to_string(m.argmax) + ", formula " +
                        std::to_string(m.formula_k_star);
    if (m.informational) {
      r.notes.push_back(where + (m.formula_agrees && m.unique ? " (agrees; informational, below n = 4)"
                                                               : " (differs; informational, below n = 4)"));
      continue;
    }
    if (!m.unique) r.fail(where + ", mode not unique");
    if (!m.strictly_increasing_left) r.fail(where + ", not strictly increasing left of the mode");
    if (!m.formula_agrees) r.fail(where + ", argmax differs from formula");
  }
  r.duration_ms = timer.ms();
  return r;
}

}  // namespace jlcert
