#pragma once

// Re-verification of the log-concavity and mode arguments. Universally
// quantified polynomial statements get symbolic certificates; statements with radicals are checked exactly at every
// lattice point up to configurable bounds, which is weaker than a proof for
// all n and is stated as such in every report.

#include <optional>
#include <string>
#include <utility>

#include "jlcert/exactnum.hpp"
#include "jlcert/polynomials.hpp"
#include "jlcert/report.hpp"
#include "jlcert/triangle.hpp"

namespace jlcert {

// ---------------------------------------------------------------------------
// Closed-form ingredients

/// Polynomials in (n, k).
BiPoly poly_h1();
BiPoly poly_h2();
BiPoly poly_delt();
/// Radicand numerator of the window bounds, in n only (second variable unused).
BiPoly poly_window_radicand();
/// The cubic whose smallest root is the discriminant threshold, in (n, X).
BiPoly poly_threshold_cubic();

/// Lower ratio bound (n-k)(n+1) / (n(n-2k+1)).
Rational eval_L(int n, int k);

/// (k1, k2) for row n >= 2.
std::pair<QuadSurd, QuadSurd> eval_window(int n);

/// Strict membership k1 < k < k2, decided exactly.
bool in_window(int n, int k);

/// Refined lower ratio bound; throws DomainError when H1(n,k) < 0.
QuadSurd eval_l(int n, int k);

/// Upper ratio bound evaluated with square-root enclosures of the given
/// precision. nullopt when the inner denominator enclosure still contains 0.
/// Exact at n = 2k. Throws DomainError when H2(n,k) < 0.
std::optional<RatInterval> eval_h(int n, int k, long precision);

/// eval_h refined until its width is at most 2^-width_exponent.
RatInterval eval_h_width(int n, int k, long width_exponent);

/// The one-expression form of the induction step, by interval arithmetic.
std::optional<RatInterval> eval_step_transcribed(int n, int k, long precision);

/// (2+n)/(n-2k+2) / h(n,k) + L(n+1,k) - l(n+1,k), by interval arithmetic.
std::optional<RatInterval> eval_step_composed(int n, int k, long precision);

/// g_{n,k}(x) = a x^2 + b x + c.
struct QuadraticForm {
  Rational a, b, c;

  static QuadraticForm at(int n, int k);

  Rational operator()(const Rational& x) const { return (a * x + b) * x + c; }
  QuadSurd operator()(const QuadSurd& x) const;
  Rational derivative(const Rational& x) const { return 2 * a * x + b; }
  QuadSurd derivative(const QuadSurd& x) const;
  Rational discriminant() const { return b * b - 4 * a * c; }
};

Rational eval_delt(int n, int k);
Rational eval_g(int n, int k, const Rational& x);

/// Isolating interval for the smallest real root of the threshold cubic.
RatInterval isolate_R1(int n, long width_exponent);

// ---------------------------------------------------------------------------
// Verification suites

enum class Decision { True, False, Undecided };

/// Decides value >= 0 for an interval-valued evaluation, doubling precision
/// from 16 bits up to kMaxWidthExponent.
template <typename Eval>
Decision decide_nonnegative(Eval&& eval) {
  for (long p = 16; p <= kMaxWidthExponent; p *= 2) {
    std::optional<RatInterval> v = eval(p);
    if (!v) continue;
    if (sign(v->lo()) >= 0) return Decision::True;
    if (sign(v->hi()) < 0) return Decision::False;
  }
  return Decision::Undecided;
}

/// Lower ratio bound L with its base equality at n = 2k. The one-step identity
/// and the shift structure of L are checked alongside.
Report verify_ratio_lower_bound(const JLTable& table, int n_max);

/// l <= ratio <= h on the window, with its base case and induction step. The
/// two forms of the step must agree in sign.
Report verify_ratio_window(const JLTable& table, int n_max);

/// Log-concavity through g_{n,k}: exact identity at every point, then the
/// discriminant / lower-bound branch argument; small rows directly.
Report verify_log_concavity_argument(const JLTable& table, int n_max);

/// Polynomial identities tying the discriminant to the threshold cubic.
Report verify_discriminant_factorization();

/// delt(n,k) > 0 exactly when k exceeds the smallest cubic root, for every
/// lattice point 10 <= n <= n_max, 1 <= k <= n/2.
CheckResult verify_discriminant_threshold(int n_max);

enum class ConeSystem { DSystem, BSystem, CSystem };

const char* to_string(ConeSystem s);

/// Reduces the linear induction implication over the open order cone to sign
/// conditions on coefficient polynomials and certifies them. Inconclusive
/// certificates fall back to an exact lattice scan up to lattice_bound.
CheckResult cone_certificate(ConeSystem system, int lattice_bound = 500);

/// A(0) = 1, A strictly increasing; B(0) = -1, B strictly decreasing.
Report verify_diagonals(const JLTable& table, int k_max);

/// Phi(n,k) > 0 on n >= 6k+4; the base row n = 6k+4 is flagged since the
/// argument only supplies the step.
Report audit_phi(const JLTable& table, int n_max);

struct PipelineConfig {
  int n_max = 300;            // ratio bounds and the g-branch argument
  int scan_n_max = 500;       // table-level scans and lattice fallbacks
  int recurrence_n_max = 200;
  int k_max = 60;             // diagonal sequences A, B
  int oracle_n_max = 14;
  int engine_check_n_max = 200;
  bool run_oracle = true;
};

/// Rows the pipeline needs for a configuration.
int rows_required(const PipelineConfig& config);

Report certify_all(const PipelineConfig& config);
/// Runs the pipeline against a supplied (possibly altered) table.
Report certify_all(const JLTable& table, const PipelineConfig& config);

}  // namespace jlcert
